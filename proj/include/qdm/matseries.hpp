#pragma once

#include <utility>
#include <vector>

#include "qdm/series.hpp"

namespace qdm {

/* Square matrix over the basis, entries scalar hbar-Laurent. */
struct Mat {
  int nsz = 0;
  std::vector<HScal> a;

  Mat() = default;
  explicit Mat(int n) : nsz(n), a(static_cast<std::size_t>(n) * n) {}
  HScal& at(int i, int j) { return a[static_cast<std::size_t>(i) * nsz + j]; }
  const HScal& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * nsz + j];
  }
  void trim() {
    for (auto& e : a) hs_trim(e);
  }
  bool is_zero() const {
    for (const auto& e : a)
      if (!hs_is_zero(e)) return false;
    return true;
  }
  bool operator==(const Mat& o) const {
    Mat x = *this, y = o;
    x.trim();
    y.trim();
    return x.nsz == y.nsz && x.a == y.a;
  }
};

Mat mat_id(int n);
Mat mat_from_rat(const std::vector<std::vector<Rat>>& m);
Mat mat_from_lpoly(const std::vector<std::vector<LPoly>>& m);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_neg(const Mat& x);
Mat mat_flip(const Mat& x);       // hbar -> -hbar
Mat mat_transpose(const Mat& x);
Mat mat_shift(const Mat& x, int k);  // times hbar^k
std::pair<Mat, Mat> mat_split(const Mat& x);
HLaurent mat_apply(const Mat& m, const HLaurent& v);

void acc_in(Mat& a, const Mat& b);
void axpy(Mat& a, const LPoly& s, const Mat& b);
inline bool is_zero_t(const Mat& a) { return a.is_zero(); }

using SerM = QSeries<Mat>;

SerM ser_id(const IVec& box, int n);
SerM ser_const_mat(const IVec& box, const Mat& m);
SerM ser_mul(const SerM& x, const SerM& y);
SerV ser_apply(const SerM& m, const SerV& v);
SerM ser_flip(const SerM& x);
SerM ser_transpose(const SerM& x);
SerM ser_shift(const SerM& x, int k);
std::pair<SerM, SerM> ser_split(const SerM& x);

/* Neumann inversion; the q-constant term must be an invertible matrix of
 * plain rationals (identity in every honest use). */
SerM matrix_series_invert(const SerM& m);

/* Degree-w homogeneity of an operator series: each monomial q^d hbar^k
 * lambda^l in entry (i,j) must satisfy
 * sum_a d_a deg(q^a) + 2k + 2l + deg T_i - deg T_j = w. */
bool ser_homogeneous(const CohoRing& ring, const SerM& x, int w);

}  // namespace qdm
