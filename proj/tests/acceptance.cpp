/* Acceptance gate: exact, end-to-end checks of the published reference
 * values.  One line per criterion; exit status reflects overall result. */

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "qdm/io.hpp"

using namespace qdm;

namespace {

struct Fail {
  std::string msg;
};

void req(bool ok, const std::string& what) {
  if (!ok) throw Fail{what};
}

/* coefficient of hbar^h of every entry, as an hbar-free scalar series */
SerS pick(const SerS& s, int h) {
  SerS out(s.box);
  for (const auto& [d, v] : s.coef) {
    auto it = v.find(h);
    if (it != v.end()) out.add(d, hs_const(it->second));
  }
  return out;
}

SerS lift(const SerL& x) {
  SerS out(x.box);
  for (const auto& [d, c] : x.coef) out.add(d, hs_const(c));
  return out;
}

void match_matrix(const SerM& got, const std::vector<std::string>& want,
                  const IVec& box, int r, const std::string& name) {
  const int n = 4;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SerS g = entry_series(got, i, j);
      SerS w = parse_series(want[static_cast<std::size_t>(i) * n + j], box, r);
      req(g == w, name + " entry (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "): got " + render_series(g));
    }
}

void match_level(const SerM& got, int h, const std::vector<std::string>& want,
                 const IVec& box, int r, const std::string& name) {
  const int n = 4;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SerS g = pick(entry_series(got, i, j), h);
      SerS w = parse_series(want[static_cast<std::size_t>(i) * n + j], box, r);
      req(g == w, name + " hbar^" + std::to_string(h) + " entry (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "): got " + render_series(g));
    }
}

ToricSuperspace f1() {
  return make_superspace({{1, 0}, {-1, -1}, {0, 1}, {0, -1}},
                         {{1, 3}, {3, 2}, {2, 4}, {4, 1}},
                         {{1, 0}, {1, 0}, {0, 1}, {-1, 1}}, {});
}

ToricSuperspace f1_super() {
  return make_superspace({{1, 0}, {-1, -1}, {0, 1}, {0, -1}},
                         {{1, 3}, {3, 2}, {2, 4}, {4, 1}},
                         {{1, 0}, {1, 0}, {0, 1}, {-1, 1}}, {{0, 2}});
}

PPoly word_product(const std::vector<LinFactor>& w, int r) {
  PPoly acc = pp_one(r);
  for (const auto& f : w) acc = pp_mul(acc, linfactor_poly(f, r));
  return acc;
}

/* 1: geometric-frame connection and small quantum products of the
 *    del Pezzo surface at cutoff (3,3) */
void c1() {
  IVec box = {3, 3};
  auto pd = run_pipeline(f1(), box, LambdaMode::Zero);
  run_mirror_stage(pd);

  std::vector<std::string> om1 = {
      "0", "0", "0", "q1*q2",
      "1", "-q1", "0", "0",
      "0", "q1", "0", "0",
      "0", "0", "1", "0"};
  std::vector<std::string> om2 = {
      "0", "0", "q2", "q1*q2",
      "0", "0", "0", "q2",
      "1", "0", "0", "0",
      "0", "1", "1", "0"};
  match_matrix(pd.conn.omega[0], om1, box, 2, "Omega1");
  match_matrix(pd.conn.omega[1], om2, box, 2, "Omega2");

  req(pd.gauge.plus == ser_id(box, pd.ring.dim), "S_plus is not the identity");

  // p1 * p1 = -q1 p1 + q1 p2 and p1 * (p1 p2) = q1 q2
  auto col = [&](int a, int j, int k) {
    return render_series(entry_series(pd.flat.omega[a], k, j));
  };
  req(col(0, 1, 0) == "0" && col(0, 1, 1) == "-q1" && col(0, 1, 2) == "q1" &&
          col(0, 1, 3) == "0",
      "p1 * p1 != -q1 p1 + q1 p2");
  req(col(0, 3, 0) == "q1*q2" && col(0, 3, 1) == "0" && col(0, 3, 2) == "0" &&
          col(0, 3, 3) == "0",
      "p1 * (p1 p2) != q1 q2");
}

/* 2: difference relations of the del Pezzo surface */
void c2() {
  auto ring = build_ring(f1());
  FloerModel fm(ring, LambdaMode::Zero);
  IVec box = {3, 3};

  auto r1 = fm.picard_fuchs(IVec{1, 0});
  PPoly left1 = pp_from_exp(2, PExp{0, 1});  // P2
  pp_addin(left1, pp_scale(LPoly(-1), pp_gen(2, 1)));
  PPoly h1;
  h1[PKey{PExp{0, 0}, 1}] = LPoly(1);
  pp_addin(left1, h1);  // + hbar
  req(word_product(r1.left, 2) == left1, "left word of direction (1,0)");
  req(word_product(r1.right, 2) == pp_mul(pp_gen(2, 1), pp_gen(2, 1)),
      "right word of direction (1,0)");
  req(fm.verify_pf(r1, box), "relation (1,0) fails verification");

  auto r2 = fm.picard_fuchs(IVec{0, 1});
  req(word_product(r2.left, 2) == pp_one(2), "left word of direction (0,1)");
  PPoly right2 = pp_from_exp(2, PExp{0, 1});
  pp_addin(right2, pp_scale(LPoly(-1), pp_gen(2, 1)));
  right2 = pp_mul(pp_gen(2, 2), right2);  // P2 (P2 - P1)
  req(word_product(r2.right, 2) == right2, "right word of direction (0,1)");
  req(fm.verify_pf(r2, box), "relation (0,1) fails verification");
}

/* 3: geometric-frame connection of the superspace at cutoff (3,4) */
void c3() {
  IVec box = {3, 4};
  auto pd = run_pipeline(f1_super(), box, LambdaMode::Zero);

  const std::string gy = "(q2 + 4*q2^2 + 16*q2^3 + 64*q2^4)";       // y/(1-4y)
  const std::string gy2 = "(q2 + 8*q2^2 + 48*q2^3 + 256*q2^4)";     // y/(1-4y)^2
  const std::string geo = "1 + 4*q2 + 16*q2^2 + 64*q2^3 + 256*q2^4";

  std::vector<std::string> om1 = {
      "0", "0", "0", "2*q1*" + gy + "*h^2",
      "1", "-q1", "0", "0",
      "0", "q1", "0", "6*q1*" + gy + "*h",
      "0", "0", "1", "4*q1*" + gy};
  std::vector<std::string> om2 = {
      "0", "0", "2*" + gy + "*h^2", "2*q1*" + gy2 + "*h^2",
      "0", "0", "0", "2*" + gy + "*h^2",
      "1", "0", "6*" + gy + "*h", "6*q1*" + gy2 + "*h",
      "0", "1", geo, "6*" + gy + "*h + 4*q1*" + gy2};
  match_matrix(pd.conn.omega[0], om1, box, 2, "Omega1");
  match_matrix(pd.conn.omega[1], om2, box, 2, "Omega2");
}

/* 4: Birkhoff factors of the superspace at cutoff (4,4) */
void c4() {
  IVec box = {4, 4};
  auto pd = run_pipeline(f1_super(), box, LambdaMode::Zero);
  SerM spinv = matrix_series_invert(pd.gauge.plus);
  SerM sminv = matrix_series_invert(pd.gauge.minus);

  std::vector<std::string> sp0 = {
      "1 + 2*q2 + 6*q2^2 + 20*q2^3 + 70*q2^4",
      "2*q1*(q2 + 6*q2^2 + 30*q2^3 + 140*q2^4)",
      "2*q1*(q2 + 10*q2^2 + 70*q2^3 + 420*q2^4)",
      "8*q1^2*(q2^2 + 14*q2^3 + 126*q2^4)",
      "0",
      "1 + 2*q2 + 6*q2^2 + 20*q2^3 + 70*q2^4",
      "2*(q2 + 7*q2^2 + 38*q2^3 + 187*q2^4)",
      "8*q1*(q2^2 + 11*q2^3 + 82*q2^4)",
      "0", "0",
      "1 + 4*q2 + 16*q2^2 + 64*q2^3 + 256*q2^4",
      "4*q1*(q2 + 8*q2^2 + 48*q2^3 + 256*q2^4)",
      "0", "0", "0",
      "1 + 4*q2 + 16*q2^2 + 64*q2^3 + 256*q2^4"};
  std::vector<std::string> sp1 = {
      "0", "0",
      "2*q2 + 12*q2^2 + 60*q2^3 + 280*q2^4",
      "2*q1*(q2 + 12*q2^2 + 90*q2^3 + 560*q2^4)",
      "0", "0", "0",
      "2*q2 + 12*q2^2 + 60*q2^3 + 280*q2^4",
      "0", "0", "0", "0",
      "0", "0", "0", "0"};
  match_level(spinv, 0, sp0, box, 2, "SPlusInv");
  match_level(spinv, 1, sp1, box, 2, "SPlusInv");
  for (const auto& [d, m] : spinv.coef) {
    (void)d;
    for (const auto& e : m.a)
      for (const auto& [h, c] : e) {
        (void)c;
        req(h == 0 || h == 1, "S_plus^{-1} carries hbar^" + std::to_string(h));
      }
  }

  std::vector<std::string> sm1 = {
      "2*q1*(q2 + 4*q2^2 + 16*q2^3 + 64*q2^4)",
      "2*q1^2*(q2^2 + 8*q2^3 + 48*q2^4)",
      "2*q1^2*(q2^2 + 8*q2^3 + 48*q2^4)",
      "0",
      "2*q2 + 5*q2^2 + 44/3*q2^3 + 93/2*q2^4",
      "q1*(-1 + 2*q2^2 + 12*q2^3 + 58*q2^4)",
      "2*q1*(q2^2 + 6*q2^3 + 29*q2^4)",
      "0",
      "2*q2 + 3*q2^2 + 20/3*q2^3 + 35/2*q2^4",
      "q1*(1 + 2*q2 + 6*q2^2 + 20*q2^3 + 70*q2^4)",
      "2*q1*(q2 + 3*q2^2 + 10*q2^3 + 35*q2^4)",
      "0",
      "0",
      "2*q2 + 3*q2^2 + 20/3*q2^3 + 35/2*q2^4",
      "2*q2 + 3*q2^2 + 20/3*q2^3 + 35/2*q2^4",
      "0"};
  std::vector<std::string> sm2 = {
      "3*q1^2*(q2^2 + 8*q2^3 + 48*q2^4)",
      "4*q1^3*(q2^3 + 12*q2^4)",
      "4*q1^3*(q2^3 + 12*q2^4)",
      "0",
      "q1*(-1 - 2*q2 - 2*q2^2 + 6*q2^3 + 190/3*q2^4)",
      "q1^2*(1/2 - 2*q2^2 - 8*q2^3 - 15*q2^4)",
      "q1^2*(-2*q2^2 - 8*q2^3 - 15*q2^4)",
      "0",
      "q1*(1 + 2*q2 + 10*q2^2 + 42*q2^3 + 514/3*q2^4)",
      "q1^2*(-1/2 + 3*q2^2 + 24*q2^3 + 143*q2^4)",
      "q1^2*(3*q2^2 + 24*q2^3 + 143*q2^4)",
      "0",
      "-2*q2 + 3/2*q2^2 + 88/9*q2^3 + 937/24*q2^4",
      "q1*(-1 - 2*q2 - 2*q2^2 + 2*q2^3 + 94/3*q2^4)",
      "q1*(-2*q2 - 2*q2^2 + 2*q2^3 + 94/3*q2^4)",
      "0"};
  std::vector<std::string> sm3 = {
      "q1^3*(10/3*q2^3 + 40*q2^4)",
      "5*q1^4*q2^4",
      "5*q1^4*q2^4",
      "0",
      "q1^2*(1/4 - q2 - 17/2*q2^2 - 42*q2^3 - 355/2*q2^4)",
      "q1^3*(-1/6 - q2^2 - 14*q2^3 - 105*q2^4)",
      "q1^3*(-q2^2 - 14*q2^3 - 105*q2^4)",
      "0",
      "q1^2*(-1/4 + q2 + 15/2*q2^2 + 46*q2^3 + 499/2*q2^4)",
      "q1^3*(1/6 + q2^2 + 40/3*q2^3 + 113*q2^4)",
      "q1^3*(q2^2 + 40/3*q2^3 + 113*q2^4)",
      "0",
      "q1*(-2 - 4*q2 - 16*q2^2 - 53*q2^3 - 1552/9*q2^4)",
      "q1^2*(3/4 - 9/2*q2^2 - 32*q2^3 - 335/2*q2^4)",
      "q1^2*(-9/2*q2^2 - 32*q2^3 - 335/2*q2^4)",
      "0"};
  std::vector<std::string> id4 = {
      "1", "0", "0", "0",
      "0", "1", "0", "0",
      "0", "0", "1", "0",
      "0", "0", "0", "1"};
  match_level(sminv, 0, id4, box, 2, "SMinusInv");
  match_level(sminv, -1, sm1, box, 2, "SMinusInv");
  match_level(sminv, -2, sm2, box, 2, "SMinusInv");
  match_level(sminv, -3, sm3, box, 2, "SMinusInv");
}

/* 5: flat coordinates and frame factor of the superspace */
void c5() {
  IVec box = {3, 4};
  auto pd = run_pipeline(f1_super(), box, LambdaMode::Zero);
  run_mirror_stage(pd);

  auto eq = [&](const SerL& got, const std::string& want, const std::string& what) {
    req(lift(got) == parse_series(want, box, 2),
        what + ": got " + render_series(got));
  };
  // forward map x = xhat (1 - qhat2)^2, y = qhat2/(1 + qhat2)^2
  eq(ser_exp(pd.mir.delta[0]), "1 - 2*q2 + q2^2", "forward factor of q1");
  eq(ser_exp(pd.mir.delta[1]), "1 - 2*q2 + 3*q2^2 - 4*q2^3 + 5*q2^4",
     "forward factor of q2");
  // inverse map
  eq(ser_exp(pd.mir.dhat[0]), "1 + 2*q2 + 7*q2^2 + 26*q2^3 + 99*q2^4",
     "inverse factor of q1");
  eq(ser_exp(pd.mir.dhat[1]), "1 + 2*q2 + 5*q2^2 + 14*q2^3 + 42*q2^4",
     "inverse factor of q2");
  // potential in flat coordinates and the frame factor
  eq(substitute(pd.mir.F, pd.mir.delta), "-2*q1*q2", "potential");
  eq(pd.mir.f, "1 - 2*q2 - 2*q2^2 - 4*q2^3 - 10*q2^4", "frame factor");
}

/* 6: connection in flat coordinates of the superspace */
void c6() {
  IVec box = {3, 4};
  auto pd = run_pipeline(f1_super(), box, LambdaMode::Zero);
  run_mirror_stage(pd);

  std::vector<std::string> f1hat = {
      "0", "4*q1^2*q2^2", "4*q1^2*q2^2", "0",
      "1", "-q1*(1 - q2^2)", "2*q1*q2^2", "0",
      "0", "q1*(1 - q2^2)", "-2*q1*q2^2", "0",
      "0", "0", "1", "-2*q1*q2"};
  std::vector<std::string> f2hat = {
      "0", "4*q1^2*q2^2", "4*q1^2*q2^2", "0",
      "0", "2*q1*q2^2", "4*q1*q2^2", "0",
      "1", "-2*q1*q2^2", "-4*q1*q2^2", "0",
      "0", "1", "1 - 2*q2 - 2*q2^2 - 2*q2^3 - 2*q2^4", "-2*q1*q2"};
  match_matrix(pd.flat.omega[0], f1hat, box, 2, "QOmega1");
  match_matrix(pd.flat.omega[1], f2hat, box, 2, "QOmega2");
}

/* 7: invariant battery over every reference input */
void c7() {
  struct Case {
    ToricSuperspace ts;
    IVec box;
    std::string name;
  };
  std::vector<Case> cases;
  cases.push_back({make_superspace({{1}, {-1}}, {{1}, {2}}, {{1}, {1}}, {}),
                   IVec{3}, "line"});
  cases.push_back({make_superspace({{1, 0}, {0, 1}, {-1, -1}},
                                   {{1, 2}, {2, 3}, {3, 1}}, {{1}, {1}, {1}}, {}),
                   IVec{3}, "plane"});
  cases.push_back({f1(), IVec{3, 3}, "surface"});
  cases.push_back({f1_super(), IVec{2, 3}, "superspace"});
  for (auto& c : cases) {
    auto pd = run_pipeline(c.ts, c.box, LambdaMode::Zero);
    auto rep = verify_suite(pd);
    for (const auto& [name, ok] : rep.checks)
      req(ok, c.name + ": check " + name + " failed");
    req(rep.all_ok, c.name + ": suite failed");
  }
}

/* 8: quantum products and relations of the rigid references */
void c8() {
  auto p1 = make_superspace({{1}, {-1}}, {{1}, {2}}, {{1}, {1}}, {});
  auto pd = run_pipeline(p1, {3}, LambdaMode::Zero);
  run_mirror_stage(pd);
  req(render_series(entry_series(pd.flat.omega[0], 0, 1)) == "q1" &&
          render_series(entry_series(pd.flat.omega[0], 1, 1)) == "0",
      "p * p != q on the line");

  auto ring = build_ring(p1);
  FloerModel fm(ring, LambdaMode::Zero);
  auto rel = fm.picard_fuchs(IVec{1});
  req(word_product(rel.left, 1) == pp_one(1), "line relation: left word");
  req(word_product(rel.right, 1) == pp_mul(pp_gen(1, 1), pp_gen(1, 1)),
      "line relation: right word");
  req(fm.verify_pf(rel, {3}), "line relation fails verification");

  auto p2 = make_superspace({{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}},
                            {{1}, {1}, {1}}, {});
  auto qd = run_pipeline(p2, {3}, LambdaMode::Zero);
  run_mirror_stage(qd);
  req(render_series(entry_series(qd.flat.omega[0], 2, 1)) == "1" &&
          render_series(entry_series(qd.flat.omega[0], 0, 1)) == "0",
      "p * p != p^2 on the plane");
  req(render_series(entry_series(qd.flat.omega[0], 0, 2)) == "q1" &&
          render_series(entry_series(qd.flat.omega[0], 1, 2)) == "0" &&
          render_series(entry_series(qd.flat.omega[0], 2, 2)) == "0",
      "p * p^2 != q on the plane");
}

struct Criterion {
  int num;
  std::string name;
  void (*fn)();
};

}  // namespace

int main() {
  const std::vector<Criterion> crits = {
      {1, "surface connection, trivial positive factor, products", c1},
      {2, "surface difference relations", c2},
      {3, "superspace connection in the geometric frame", c3},
      {4, "superspace Birkhoff factors against the printed tables", c4},
      {5, "superspace flat coordinates, potential, frame factor", c5},
      {6, "superspace connection in flat coordinates", c6},
      {7, "invariant battery on all reference inputs", c7},
      {8, "rigid-space products and relations", c8},
  };
  int failures = 0;
  for (const auto& c : crits) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.fn();
    } catch (const Fail& f) {
      verdict = "FAIL";
      detail = f.msg;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << verdict << " criterion " << c.num << ": " << c.name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
