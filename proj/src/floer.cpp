#include "qdm/floer.hpp"

#include <algorithm>
#include <sstream>

#include "qdm/parallel.hpp"

namespace qdm {

PPoly pp_one(int r) {
  PPoly x;
  x[PKey{PExp(r, 0), 0}] = LPoly(1);
  return x;
}

PPoly pp_gen(int r, int a) {
  PPoly x;
  PExp e(r, 0);
  e[a - 1] = 1;
  x[PKey{e, 0}] = LPoly(1);
  return x;
}

PPoly pp_from_exp(int r, const PExp& e) {
  PPoly x;
  PExp ee = e;
  ee.resize(r, 0);
  x[PKey{ee, 0}] = LPoly(1);
  return x;
}

void pp_addin(PPoly& x, const PPoly& y) {
  for (const auto& [k, c] : y) {
    x[k] += c;
    if (x[k].is_zero()) x.erase(k);
  }
}

PPoly pp_mul(const PPoly& x, const PPoly& y) {
  PPoly out;
  for (const auto& [k1, c1] : x)
    for (const auto& [k2, c2] : y) {
      PKey k;
      k.p.resize(k1.p.size());
      for (std::size_t t = 0; t < k.p.size(); ++t) k.p[t] = k1.p[t] + k2.p[t];
      k.h = k1.h + k2.h;
      out[k] += c1 * c2;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

PPoly pp_scale(const LPoly& s, const PPoly& x) {
  PPoly out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : x) {
    LPoly v = s * c;
    if (!v.is_zero()) out[k] = v;
  }
  return out;
}

PPoly pp_flip(const PPoly& x) {
  PPoly out;
  for (const auto& [k, c] : x) out[k] = (k.h % 2 == 0) ? c : -c;
  return out;
}

bool pp_is_zero(const PPoly& x) {
  for (const auto& [k, c] : x)
    if (!c.is_zero()) return false;
  return true;
}

PPoly linfactor_poly(const LinFactor& f, int r) {
  PPoly x;
  for (int a = 0; a < r; ++a)
    if (f.c[a]) {
      PExp e(r, 0);
      e[a] = 1;
      x[PKey{e, 0}] = LPoly(Rat(f.c[a]));
    }
  if (f.nu != 0) x[PKey{PExp(r, 0), 1}] = LPoly(Rat(-f.nu));
  if (f.lam) x[PKey{PExp(r, 0), 0}] -= LPoly::lambda();
  for (auto it = x.begin(); it != x.end();)
    it = it->second.is_zero() ? x.erase(it) : std::next(it);
  return x;
}

long hbar_window_floor(const ToricSuperspace& ts, const IVec& box) {
  long acc = 1;
  for (int a = 0; a < ts.r; ++a) {
    long mx = 0;
    for (int i = 0; i < ts.N; ++i) mx = std::max(mx, ts.m[i][a]);
    acc += box[a] * mx;
  }
  return -static_cast<long>(ts.N) * acc;
}

namespace {

std::string show_d(const IVec& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t a = 0; a < d.size(); ++a) os << (a ? "," : "") << d[a];
  os << ")";
  return os.str();
}

void check_window(const HLaurent& x, long floor_exp, const char* where) {
  if (x.empty()) return;
  if (x.begin()->first < floor_exp)
    fail_invariant(std::string(where) + ": hbar exponent below the sanity window");
}

}  // namespace

FloerModel::FloerModel(const CohoRing& ring, LambdaMode mode)
    : R(&ring), mode_(mode) {
  for (int i = 1; i <= ring.ts.N; ++i) {
    CohoClass u = ring.zero();
    for (int a = 0; a < ring.ts.r; ++a)
      if (ring.ts.m[i - 1][a]) u += Rat(ring.ts.m[i - 1][a]) * ring.gen(a + 1);
    u_cls.push_back(u);
  }
  for (int j = 1; j <= ring.ts.ell; ++j) {
    CohoClass v = ring.zero();
    for (int a = 0; a < ring.ts.r; ++a)
      if (ring.ts.l[j - 1][a]) v += Rat(ring.ts.l[j - 1][a]) * ring.gen(a + 1);
    v_cls.push_back(v);
  }
  euler_ = euler_class(ring, mode);
}

HLaurent FloerModel::eval_at(const PPoly& T, const IVec& d) const {
  // P_a at the fixed-point component indexed by d: p_a + d_a hbar
  std::vector<HLaurent> pa(R->ts.r);
  for (int a = 0; a < R->ts.r; ++a) {
    HLaurent v;
    v[0] = R->gen(a + 1);
    if (d[a] != 0) {
      CohoClass s = R->unit();
      s *= LPoly(Rat(d[a]));
      v[1] = s;
    }
    pa[a] = v;
  }
  HLaurent out;
  for (const auto& [key, coef] : T) {
    HLaurent term = hl_class(R->unit());
    for (int a = 0; a < R->ts.r; ++a)
      for (int rep = 0; rep < key.p[a]; ++rep) term = hl_mul(*R, term, pa[a]);
    HLaurent shifted;
    for (const auto& [h, cls] : term) {
      CohoClass w = cls;
      w *= coef;
      if (!w.is_zero()) shifted[h + key.h] = w;
    }
    hl_addin(out, shifted);
  }
  return out;
}

HLaurent FloerModel::window_ratio(const IVec& e) const {
  HLaurent out = hl_class(R->unit());
  for (int i = 1; i <= R->ts.N; ++i) {
    long k = R->ts.pair_u(i - 1, e);
    if (k >= 0) {
      for (long nu = 1; nu <= k; ++nu)
        out = hl_mul(*R, out, inv_linear(*R, u_cls[i - 1], nu));
    } else {
      for (long nu = k + 1; nu <= 0; ++nu) {
        HLaurent f;
        f[0] = u_cls[i - 1];
        if (nu != 0) {
          CohoClass s = R->unit();
          s *= LPoly(Rat(nu));
          f[1] = s;
        }
        out = hl_mul(*R, out, f);
        if (out.empty()) return out;
      }
    }
  }
  for (int j = 1; j <= R->ts.ell; ++j) {
    long k = R->ts.pair_v(j - 1, e);
    if (k < 0)
      fail_invariant("NegativeBundleDegree at class " + show_d(e));
    for (long nu = 1; nu <= k; ++nu) {
      HLaurent f;
      CohoClass c0 = v_cls[j - 1];
      if (mode_ == LambdaMode::Symbolic) c0 += (-LPoly::lambda()) * R->unit();
      if (!c0.is_zero()) f[0] = c0;
      CohoClass s = R->unit();
      s *= LPoly(Rat(nu));
      f[1] = s;
      out = hl_mul(*R, out, f);
    }
  }
  return out;
}

HLaurent FloerModel::loc_core(const IVec& rel, const IVec& abs, const PPoly& T) const {
  return hl_mul(*R, eval_at(T, abs), window_ratio(rel));
}

HLaurent FloerModel::localization_coefficient(const IVec& d, const PPoly& T,
                                              const IVec& box) const {
  HLaurent out = loc_core(d, d, T);
  check_window(out, hbar_window_floor(R->ts, box), "localization");
  return out;
}

SerV FloerModel::xi(const FloerCycle& cyc, const IVec& box) const {
  SerV out(box);
  const long floor_exp = hbar_window_floor(R->ts, box);
  for (const auto& e : box_points(box)) {
    IVec tgt(e.size());
    bool ok = true;
    for (std::size_t a = 0; a < e.size(); ++a) {
      tgt[a] = e[a] + (cyc.shift.empty() ? 0 : cyc.shift[a]);
      if (tgt[a] < 0) ok = false;
    }
    if (!ok || !out.in_box(tgt)) continue;
    HLaurent v = loc_core(e, tgt, cyc.T);
    check_window(v, floor_exp, "xi");
    out.add(tgt, v);
  }
  return out;
}

SerM FloerModel::s_inverse_matrix(const IVec& box) const {
  const int dim = R->dim;
  std::vector<SerV> cols(dim);
  parallel_for(dim, [&](std::size_t j) {
    cols[j] = xi(FloerCycle{pp_from_exp(R->ts.r, R->basis[j]), IVec(R->ts.r, 0)}, box);
  });
  SerM S(box);
  for (int j = 0; j < dim; ++j)
    for (const auto& [d, hl] : cols[j].coef) {
      auto it = S.coef.find(d);
      if (it == S.coef.end()) it = S.coef.emplace(d, Mat(dim)).first;
      for (const auto& [h, cls] : hl)
        for (int i = 0; i < dim; ++i)
          if (!cls.c[i].is_zero()) it->second.at(i, j)[h] = cls.c[i];
    }
  S.trim();
  const Mat* c0 = S.find(IVec(R->ts.r, 0));
  if (!c0 || !(*c0 == mat_id(dim)))
    fail_invariant("S-matrix constant term is not the identity");
  return S;
}

SerV FloerModel::j_function_vector(const IVec& box) const {
  return xi(FloerCycle{pp_one(R->ts.r), IVec(R->ts.r, 0)}, box);
}

PFRelation FloerModel::picard_fuchs(const IVec& d) const {
  bool allz = true;
  for (long x : d)
    if (x) allz = false;
  if (allz) fail_invariant("picard_fuchs needs d != 0");
  PFRelation rel;
  rel.d = d;
  for (int i = 1; i <= R->ts.N; ++i) {
    long k = R->ts.pair_u(i - 1, d);
    if (k < 0)
      for (long nu = k; nu <= -1; ++nu)
        rel.left.push_back(LinFactor{R->ts.m[i - 1], nu, false});
    else if (k > 0)
      for (long nu = 0; nu <= k - 1; ++nu)
        rel.right.push_back(LinFactor{R->ts.m[i - 1], nu, false});
  }
  for (int j = 1; j <= R->ts.ell; ++j) {
    long k = R->ts.pair_v(j - 1, d);
    if (k > 0)
      for (long nu = 0; nu <= k - 1; ++nu)
        rel.left.push_back(
            LinFactor{R->ts.l[j - 1], nu, mode_ == LambdaMode::Symbolic});
  }
  return rel;
}

bool FloerModel::verify_pf(const PFRelation& rel, const IVec& box) const {
  const int r = R->ts.r;
  PPoly lt = pp_one(r);
  for (const auto& f : rel.left) lt = pp_mul(lt, linfactor_poly(f, r));
  PPoly rt = pp_one(r);
  for (const auto& f : rel.right) rt = pp_mul(rt, linfactor_poly(f, r));
  SerV lhs = xi(FloerCycle{lt, rel.d}, box);
  SerV rhs = xi(FloerCycle{rt, IVec(r, 0)}, box);
  return lhs == rhs;
}

SerS FloerModel::floer_pairing(const FloerCycle& alpha, const FloerCycle& beta,
                               const IVec& box) const {
  auto window0 = [](const IVec& s) {
    for (long x : s)
      if (x) return false;
    return true;
  };
  if (!window0(alpha.shift) || !window0(beta.shift))
    fail_invariant("floer_pairing handles window-0 cycles only");

  SerV A = xi(FloerCycle{pp_flip(alpha.T), alpha.shift}, box);
  for (auto& [d, v] : A.coef) v = hl_flip(v);
  SerV B = xi(beta, box);

  SerS out(box);
  IVec d(box.size());
  for (const auto& [d1, x] : A.coef)
    for (const auto& [d2, y] : B.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (!out.in_box(d)) continue;
      HScal acc;
      for (const auto& [h1, c1] : x)
        for (const auto& [h2, c2] : y) {
          LPoly val = R->integrate(R->mul(R->mul(c1, c2), euler_));
          if (!val.is_zero()) acc[h1 + h2] += val;
        }
      hs_trim(acc);
      out.add(d, acc);
    }
  for (const auto& [dd, c] : out.coef)
    if (!c.empty() && c.begin()->first < 0)
      fail_invariant("NonPolynomialPairing at q^" + show_d(dd));
  return out;
}

}  // namespace qdm
