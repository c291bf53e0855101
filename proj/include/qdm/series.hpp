#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qdm/coho.hpp"
#include "qdm/errors.hpp"
#include "qdm/lpoly.hpp"

namespace qdm {

/* ---- scalar hbar-Laurent: finitely supported exponent -> Q[lambda] ---- */
using HScal = std::map<int, LPoly>;

void hs_trim(HScal& x);
void hs_addin(HScal& x, const HScal& y);
void hs_subin(HScal& x, const HScal& y);
HScal hs_mul(const HScal& x, const HScal& y);
HScal hs_scale(const LPoly& s, const HScal& x);
HScal hs_neg(const HScal& x);
bool hs_is_zero(const HScal& x);
HScal hs_const(const LPoly& c);
HScal hs_hpow(int k);                    // hbar^k
HScal hs_flip(const HScal& x);           // hbar -> -hbar
HScal hs_shift(const HScal& x, int k);   // multiply by hbar^k
std::pair<HScal, HScal> hs_split(const HScal& x);  // (exp >= 0, exp < 0)

/* ---- class-valued hbar-Laurent ---- */
using HLaurent = std::map<int, CohoClass>;

void hl_trim(HLaurent& x);
void hl_addin(HLaurent& x, const HLaurent& y);
HLaurent hl_scale(const LPoly& s, const HLaurent& x);
HLaurent hl_scale_h(const HScal& s, const HLaurent& x);
HLaurent hl_mul(const CohoRing& R, const HLaurent& x, const HLaurent& y);
HLaurent hl_flip(const HLaurent& x);
bool hl_is_zero(const HLaurent& x);
HLaurent hl_class(const CohoClass& v);   // concentrated at hbar^0

/* (u + c hbar)^{-1} for u with zero scalar part: nilpotency truncates the
 * geometric series at the top degree of the ring. */
HLaurent inv_linear(const CohoRing& R, const CohoClass& u, long c);

/* ---- accumulation helpers shared by the generic series templates ----
 * acc_in(a, b): a += b, adopting b's shape if a is still default-constructed.
 * axpy(a, s, b): a += s*b for a scalar s in Q[lambda]. */
inline void acc_in(LPoly& a, const LPoly& b) { a += b; }
inline void axpy(LPoly& a, const LPoly& s, const LPoly& b) { a += s * b; }
void acc_in(HScal& a, const HScal& b);
void axpy(HScal& a, const LPoly& s, const HScal& b);
void acc_in(CohoClass& a, const CohoClass& b);
void axpy(CohoClass& a, const LPoly& s, const CohoClass& b);
void acc_in(HLaurent& a, const HLaurent& b);
void axpy(HLaurent& a, const LPoly& s, const HLaurent& b);
inline bool is_zero_t(const LPoly& a) { return a.is_zero(); }
inline bool is_zero_t(const HScal& a) { return hs_is_zero(a); }
inline bool is_zero_t(const CohoClass& a) { return a.is_zero(); }
inline bool is_zero_t(const HLaurent& a) { return hl_is_zero(a); }

/* ---- box-truncated q-series ---- */
struct GradedLexCmp {
  bool operator()(const IVec& a, const IVec& b) const {
    long da = 0, db = 0;
    for (long x : a) da += x;
    for (long x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  }
};

template <class T>
struct QSeries {
  IVec box;  // per-variable cutoffs c_1..c_r
  std::map<IVec, T, GradedLexCmp> coef;

  QSeries() = default;
  explicit QSeries(IVec b) : box(std::move(b)) {}

  bool in_box(const IVec& d) const {
    for (std::size_t a = 0; a < box.size(); ++a)
      if (d[a] < 0 || d[a] > box[a]) return false;
    return true;
  }
  const T* find(const IVec& d) const {
    auto it = coef.find(d);
    return it == coef.end() ? nullptr : &it->second;
  }
  void add(const IVec& d, const T& v) {
    if (!in_box(d) || is_zero_t(v)) return;
    acc_in(coef[d], v);
    if (is_zero_t(coef[d])) coef.erase(d);
  }
  void trim() {
    for (auto it = coef.begin(); it != coef.end();)
      it = is_zero_t(it->second) ? coef.erase(it) : std::next(it);
  }
  bool is_zero() const {
    for (const auto& [d, v] : coef)
      if (!is_zero_t(v)) return false;
    return true;
  }
  bool operator==(const QSeries& o) const {
    QSeries a = *this, b = o;
    a.trim();
    b.trim();
    return a.coef == b.coef;
  }
};

using SerL = QSeries<LPoly>;     // hbar-free scalar series
using SerS = QSeries<HScal>;     // scalar series with hbar window
using SerV = QSeries<HLaurent>;  // class-valued series

template <class T>
QSeries<T> ser_add(QSeries<T> a, const QSeries<T>& b) {
  for (const auto& [d, v] : b.coef) a.add(d, v);
  return a;
}

template <class T>
QSeries<T> ser_scale(const LPoly& s, const QSeries<T>& x) {
  QSeries<T> out(x.box);
  for (const auto& [d, v] : x.coef) {
    T t{};
    axpy(t, s, v);
    out.add(d, t);
  }
  return out;
}

template <class T>
QSeries<T> ser_neg(const QSeries<T>& x) {
  return ser_scale(LPoly(-1), x);
}

template <class T>
QSeries<T> ser_sub(const QSeries<T>& a, const QSeries<T>& b) {
  return ser_add(a, ser_neg(b));
}

/* q^a d/dq^a */
template <class T>
QSeries<T> ser_qd(const QSeries<T>& x, int a) {
  QSeries<T> out(x.box);
  for (const auto& [d, v] : x.coef) {
    if (d[a - 1] == 0) continue;
    T t{};
    axpy(t, LPoly(Rat(d[a - 1])), v);
    out.add(d, t);
  }
  return out;
}

/* product with an hbar-free scalar series */
template <class T>
QSeries<T> ser_lmul(const SerL& s, const QSeries<T>& x) {
  QSeries<T> out(x.box);
  IVec d(x.box.size());
  for (const auto& [d1, c1] : s.coef)
    for (const auto& [d2, v] : x.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (!out.in_box(d)) continue;
      T acc{};
      axpy(acc, c1, v);
      out.add(d, acc);
    }
  return out;
}

SerL ser_mul(const SerL& a, const SerL& b);
SerL ser_one(const IVec& box);
SerL ser_mono(const IVec& box, const IVec& d, const LPoly& c);

/* exp of a series with zero constant term (finite inside the box) */
SerL ser_exp(const SerL& x);

/* f with q^a d_a f = g_a, zero constant term.  Fails on nonzero g_a(0) or
 * when the cross-derivative consistency d_a g_b[d] = d_b g_a[d] breaks. */
SerL log_integrate(const std::vector<SerL>& g);

/* Composition along log q^a = log qhat^a + delta^a(qhat): each monomial q^d
 * picks up the factor exp(sum_a d_a delta^a). */
template <class T>
QSeries<T> substitute(const QSeries<T>& x, const std::vector<SerL>& delta) {
  QSeries<T> out(x.box);
  for (const auto& [d, v] : x.coef) {
    SerL arg(x.box);
    for (std::size_t a = 0; a < delta.size(); ++a)
      if (d[a] != 0) arg = ser_add(arg, ser_scale(LPoly(Rat(d[a])), delta[a]));
    SerL e = ser_exp(arg);
    IVec nd(d.size());
    for (const auto& [ed, ec] : e.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) nd[t] = d[t] + ed[t];
      if (!out.in_box(nd)) continue;
      T acc{};
      axpy(acc, ec, v);
      out.add(nd, acc);
    }
  }
  return out;
}

/* Inverse coordinate change: given delta with log q^a = log qhat^a +
 * delta^a(qhat), produce deltahat with log qhat^a = log q^a + deltahat^a(q). */
std::vector<SerL> reverse_coordinates(const std::vector<SerL>& delta);

/* all lattice points 0 <= d <= box, sorted graded-lex */
std::vector<IVec> box_points(const IVec& box);

}  // namespace qdm
