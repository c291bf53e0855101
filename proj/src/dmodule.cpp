#include "qdm/dmodule.hpp"

#include <sstream>

namespace qdm {

namespace {

std::string show_d(const IVec& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t a = 0; a < d.size(); ++a) os << (a ? "," : "") << d[a];
  os << ")";
  return os.str();
}

}  // namespace

Mat pcup_matrix(const CohoRing& ring, int a) {
  Mat m(ring.dim);
  for (int j = 0; j < ring.dim; ++j)
    for (int i = 0; i < ring.dim; ++i)
      if (ring.cup[a][j][i] != 0) m.at(i, j) = hs_const(LPoly(ring.cup[a][j][i]));
  return m;
}

ConnectionSet connection_from_s(const CohoRing& ring, const SerM& sinv) {
  const IVec zero(sinv.box.size(), 0);
  const Mat* c0 = sinv.find(zero);
  if (!c0 || !(*c0 == mat_id(ring.dim)))
    fail_invariant("connection_from_s needs S^{-1}(0) = id");
  SerM s = matrix_series_invert(sinv);
  ConnectionSet out;
  for (int a = 1; a <= ring.ts.r; ++a) {
    SerM inner = ser_shift(ser_qd(sinv, a), 1);
    inner = ser_add(inner, ser_mul(ser_const_mat(sinv.box, pcup_matrix(ring, a)), sinv));
    SerM om = ser_mul(s, inner);
    om.trim();
    const Mat* o0 = om.find(zero);
    if (!o0 || !(*o0 == pcup_matrix(ring, a)))
      fail_invariant("connection constant term differs from the cup matrix");
    out.omega.push_back(std::move(om));
  }
  out.hbar_free = false;
  return out;
}

BirkhoffPair birkhoff_factorize(const SerM& s) {
  const IVec zero(s.box.size(), 0);
  const Mat* c0 = s.find(zero);
  if (!c0) fail_invariant("birkhoff_factorize needs S(0) = id");
  const int n = c0->nsz;
  if (!(*c0 == mat_id(n))) fail_invariant("birkhoff_factorize needs S(0) = id");

  BirkhoffPair out{SerM(s.box), SerM(s.box)};
  out.plus.add(zero, mat_id(n));
  out.minus.add(zero, mat_id(n));

  for (const auto& d : box_points(s.box)) {
    if (d == zero) continue;
    Mat resid(n);
    if (const Mat* sd = s.find(d)) resid = *sd;
    for (const auto& [d1, a1] : out.plus.coef) {
      if (d1 == zero) continue;
      IVec d2(d.size());
      bool ok = true;
      for (std::size_t t = 0; t < d.size(); ++t) {
        d2[t] = d[t] - d1[t];
        if (d2[t] < 0) ok = false;
      }
      if (!ok || d2 == zero) continue;
      const Mat* b2 = out.minus.find(d2);
      if (!b2) continue;
      acc_in(resid, mat_neg(mat_mul(a1, *b2)));
    }
    auto [plus, minus] = mat_split(resid);
    out.plus.add(d, plus);
    out.minus.add(d, minus);
  }
  out.plus.trim();
  out.minus.trim();
  return out;
}

ConnectionSet canonical_connection(const ConnectionSet& conn, const BirkhoffPair& pair) {
  SerM pinv = matrix_series_invert(pair.plus);
  ConnectionSet out;
  for (std::size_t a = 0; a < conn.omega.size(); ++a) {
    SerM om = ser_mul(ser_mul(pinv, conn.omega[a]), pair.plus);
    om = ser_add(om, ser_mul(pinv, ser_shift(ser_qd(pair.plus, static_cast<int>(a) + 1), 1)));
    om.trim();
    for (const auto& [d, m] : om.coef)
      for (const auto& e : m.a)
        for (const auto& [h, c] : e)
          if (h != 0 && !c.is_zero())
            fail_invariant("ResidualHbar: direction " + std::to_string(a + 1) +
                           " at q^" + show_d(d));
    out.omega.push_back(std::move(om));
  }
  out.hbar_free = true;
  return out;
}

SerM solve_s_recursive(const CohoRing& ring, const ConnectionSet& canon,
                       const IVec& box) {
  if (!canon.hbar_free) fail_invariant("recursive solver needs an hbar-free connection");
  const int r = static_cast<int>(box.size());
  const int n = ring.dim;
  const IVec zero(r, 0);

  // ad(p)X = pX - Xp; (k + hbar^{-1} ad(p))^{-1} = k^{-1} sum_j (-ad(p)/(k hbar))^j
  auto inv_op = [&](const Mat& p, long k, const Mat& x) {
    Mat acc(n);
    Mat cur = x;
    Rat scale(1, k);
    for (;;) {
      Mat scaled = cur;
      for (auto& e : scaled.a) e = hs_scale(LPoly(scale), e);
      acc_in(acc, scaled);
      Mat nxt = mat_mul(p, cur);
      acc_in(nxt, mat_neg(mat_mul(cur, p)));
      nxt = mat_shift(nxt, -1);
      nxt.trim();
      if (nxt.is_zero()) break;
      cur = std::move(nxt);
      scale /= -k;
    }
    return acc;
  };

  SerM s = ser_id(box, n);
  for (int k = 0; k < r; ++k) {
    // conjugate the next connection matrix and restrict to variables <= k+1
    SerM sinv = matrix_series_invert(s);
    SerM e = ser_mul(ser_mul(sinv, canon.omega[k]), s);
    SerM elow(box);
    for (const auto& [d, m] : e.coef) {
      bool keep = true;
      for (int t = k + 1; t < r; ++t)
        if (d[t] != 0) keep = false;
      if (keep) elow.add(d, m);
    }
    // check E at q^{k+1}=0 collapses to the constant cup matrix (flatness)
    Mat pmat = pcup_matrix(ring, k + 1);
    for (const auto& [d, m] : elow.coef) {
      if (d[k] != 0) continue;
      if (d == zero) {
        if (!(m == pmat)) fail_invariant("recursive solver: E(0) != p cup");
      } else if (!m.is_zero()) {
        fail_invariant("recursive solver: connection not constant at q^{k+1}=0");
      }
    }

    // solve (n + hbar^{-1} ad(p)) T_n = -hbar^{-1} sum_{i<n} E_{n-i} T_i
    std::vector<SerM> tn;  // T_n as series in variables <= k
    tn.push_back(ser_id(box, n));
    SerM t(box);
    t.add(zero, mat_id(n));
    for (long deg = 1; deg <= box[k]; ++deg) {
      SerM rhs(box);
      for (long i = 0; i < deg; ++i) {
        // E_{deg-i}: coefficients of elow with d[k] == deg-i, shifted down
        SerM ej(box);
        for (const auto& [d, m] : elow.coef)
          if (d[k] == deg - i) {
            IVec dd = d;
            dd[k] = 0;
            ej.add(dd, m);
          }
        if (ej.coef.empty()) continue;
        rhs = ser_add(rhs, ser_mul(ej, tn[i]));
      }
      SerM td(box);
      for (const auto& [d, m] : rhs.coef) {
        Mat x = mat_shift(m, -1);  // -hbar^{-1} factor
        x = mat_neg(x);
        td.add(d, inv_op(pmat, deg, x));
      }
      tn.push_back(td);
      for (const auto& [d, m] : td.coef) {
        IVec dd = d;
        dd[k] += deg;
        if (t.in_box(dd)) t.add(dd, m);
      }
    }
    s = ser_mul(s, t);
    s.trim();
  }
  return s;
}

bool flatness_ok(const ConnectionSet& conn) {
  const int r = static_cast<int>(conn.omega.size());
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      SerM resid = ser_sub(ser_qd(conn.omega[b - 1], a), ser_qd(conn.omega[a - 1], b));
      SerM comm = ser_sub(ser_mul(conn.omega[a - 1], conn.omega[b - 1]),
                          ser_mul(conn.omega[b - 1], conn.omega[a - 1]));
      resid = ser_add(resid, ser_shift(comm, -1));
      resid.trim();
      if (!resid.is_zero()) return false;
    }
  return true;
}

bool unitary_ok(const SerM& minus, const std::vector<std::vector<LPoly>>& gram) {
  SerM g = ser_const_mat(minus.box, mat_from_lpoly(gram));
  SerM lhs = ser_mul(ser_mul(ser_transpose(ser_flip(minus)), g), minus);
  return lhs == g;
}

bool self_adjoint_ok(const ConnectionSet& canon,
                     const std::vector<std::vector<LPoly>>& gram) {
  for (const auto& om : canon.omega) {
    SerM g = ser_const_mat(om.box, mat_from_lpoly(gram));
    if (!(ser_mul(g, om) == ser_mul(ser_transpose(om), g))) return false;
  }
  return true;
}

}  // namespace qdm
