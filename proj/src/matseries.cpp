#include "qdm/matseries.hpp"

namespace qdm {

Mat mat_id(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = hs_const(LPoly(1));
  return m;
}

Mat mat_from_rat(const std::vector<std::vector<Rat>>& src) {
  const int n = static_cast<int>(src.size());
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (src[i][j] != 0) m.at(i, j) = hs_const(LPoly(src[i][j]));
  return m;
}

Mat mat_from_lpoly(const std::vector<std::vector<LPoly>>& src) {
  const int n = static_cast<int>(src.size());
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!src[i][j].is_zero()) m.at(i, j) = hs_const(src[i][j]);
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat out(x.nsz);
  for (int i = 0; i < x.nsz; ++i)
    for (int k = 0; k < x.nsz; ++k) {
      if (hs_is_zero(x.at(i, k))) continue;
      for (int j = 0; j < x.nsz; ++j) {
        if (hs_is_zero(y.at(k, j))) continue;
        hs_addin(out.at(i, j), hs_mul(x.at(i, k), y.at(k, j)));
      }
    }
  return out;
}

Mat mat_neg(const Mat& x) {
  Mat out(x.nsz);
  for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = hs_neg(x.a[t]);
  return out;
}

Mat mat_flip(const Mat& x) {
  Mat out(x.nsz);
  for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = hs_flip(x.a[t]);
  return out;
}

Mat mat_transpose(const Mat& x) {
  Mat out(x.nsz);
  for (int i = 0; i < x.nsz; ++i)
    for (int j = 0; j < x.nsz; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

Mat mat_shift(const Mat& x, int k) {
  Mat out(x.nsz);
  for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = hs_shift(x.a[t], k);
  return out;
}

std::pair<Mat, Mat> mat_split(const Mat& x) {
  Mat plus(x.nsz), minus(x.nsz);
  for (std::size_t t = 0; t < x.a.size(); ++t) {
    auto [p, m] = hs_split(x.a[t]);
    plus.a[t] = std::move(p);
    minus.a[t] = std::move(m);
  }
  return {plus, minus};
}

HLaurent mat_apply(const Mat& m, const HLaurent& v) {
  HLaurent out;
  for (const auto& [hv, cls] : v)
    for (int j = 0; j < m.nsz; ++j) {
      if (cls.c[j].is_zero()) continue;
      for (int i = 0; i < m.nsz; ++i)
        for (const auto& [hm, c] : m.at(i, j)) {
          auto& target = out[hm + hv];
          if (target.c.empty()) target = CohoClass(m.nsz);
          target.c[i] += c * cls.c[j];
        }
    }
  hl_trim(out);
  return out;
}

void acc_in(Mat& a, const Mat& b) {
  if (a.nsz == 0) {
    a = b;
    return;
  }
  for (std::size_t t = 0; t < a.a.size(); ++t) hs_addin(a.a[t], b.a[t]);
}

void axpy(Mat& a, const LPoly& s, const Mat& b) {
  if (s.is_zero()) return;
  if (a.nsz == 0) a = Mat(b.nsz);
  for (std::size_t t = 0; t < a.a.size(); ++t) axpy(a.a[t], s, b.a[t]);
}

SerM ser_id(const IVec& box, int n) { return ser_const_mat(box, mat_id(n)); }

SerM ser_const_mat(const IVec& box, const Mat& m) {
  SerM s(box);
  s.add(IVec(box.size(), 0), m);
  return s;
}

SerM ser_mul(const SerM& x, const SerM& y) {
  SerM out(x.box);
  IVec d(x.box.size());
  for (const auto& [d1, m1] : x.coef)
    for (const auto& [d2, m2] : y.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (out.in_box(d)) out.add(d, mat_mul(m1, m2));
    }
  return out;
}

SerV ser_apply(const SerM& m, const SerV& v) {
  SerV out(v.box);
  IVec d(v.box.size());
  for (const auto& [d1, m1] : m.coef)
    for (const auto& [d2, x] : v.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (out.in_box(d)) out.add(d, mat_apply(m1, x));
    }
  return out;
}

SerM ser_flip(const SerM& x) {
  SerM out(x.box);
  for (const auto& [d, m] : x.coef) out.add(d, mat_flip(m));
  return out;
}

SerM ser_transpose(const SerM& x) {
  SerM out(x.box);
  for (const auto& [d, m] : x.coef) out.add(d, mat_transpose(m));
  return out;
}

SerM ser_shift(const SerM& x, int k) {
  SerM out(x.box);
  for (const auto& [d, m] : x.coef) out.add(d, mat_shift(m, k));
  return out;
}

std::pair<SerM, SerM> ser_split(const SerM& x) {
  SerM plus(x.box), minus(x.box);
  for (const auto& [d, m] : x.coef) {
    auto [p, mm] = mat_split(m);
    plus.add(d, p);
    minus.add(d, mm);
  }
  return {plus, minus};
}

SerM matrix_series_invert(const SerM& m) {
  const IVec zero(m.box.size(), 0);
  const Mat* c0 = m.find(zero);
  if (!c0 || c0->nsz == 0)
    fail_invariant("SingularConstantTerm: no constant term to invert");
  const int n = c0->nsz;

  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    aug[i][n + i] = 1;
    for (int j = 0; j < n; ++j) {
      const HScal& e = c0->at(i, j);
      for (const auto& [h, c] : e) {
        if (c.is_zero()) continue;
        if (h != 0 || !c.is_constant())
          fail_invariant("SingularConstantTerm: constant term is not rational");
        aug[i][j] = c.at_zero();
      }
    }
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) fail_invariant("SingularConstantTerm");
    std::swap(aug[piv], aug[col]);
    Rat p = aug[col][col];
    for (int k = 0; k < 2 * n; ++k) aug[col][k] /= p;
    for (int row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Rat f = aug[row][col];
      for (int k = 0; k < 2 * n; ++k) aug[row][k] -= f * aug[col][k];
    }
  }
  std::vector<std::vector<Rat>> invrows(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) invrows[i][j] = aug[i][n + j];
  Mat inv0 = mat_from_rat(invrows);

  // m = c0 (id + c0^{-1} rest);  inverse = sum_k (-c0^{-1} rest)^k c0^{-1}
  SerM k(m.box);
  for (const auto& [d, v] : m.coef) {
    if (d == zero) continue;
    k.add(d, mat_neg(mat_mul(inv0, v)));
  }
  long total = 0;
  for (long c : m.box) total += c;
  SerM geo = ser_id(m.box, n);
  SerM pw = k;
  for (long step = 1; step <= total && !pw.is_zero(); ++step) {
    geo = ser_add(geo, pw);
    pw = ser_mul(pw, k);
  }
  return ser_mul(geo, ser_const_mat(m.box, inv0));
}

bool ser_homogeneous(const CohoRing& ring, const SerM& x, int w) {
  for (const auto& [d, m] : x.coef) {
    long base = 0;
    for (std::size_t a = 0; a < d.size(); ++a) base += d[a] * ring.ts.deg_q[a];
    for (int i = 0; i < m.nsz; ++i)
      for (int j = 0; j < m.nsz; ++j)
        for (const auto& [h, c] : m.at(i, j)) {
          for (int l = 0; l <= c.deg(); ++l) {
            if (c.coeff(l) == 0) continue;
            if (base + 2 * h + 2 * l + ring.degree(i) - ring.degree(j) != w)
              return false;
          }
        }
  }
  return true;
}

}  // namespace qdm
