#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "qdm/errors.hpp"

namespace qdm {

using Rat = mpq_class;

/* Polynomial in the fiberwise equivariant parameter lambda over Q.
 * lambda is only ever multiplied in, never inverted. */
class LPoly {
 public:
  LPoly() = default;
  LPoly(const Rat& r) {
    if (r != 0) c_.push_back(r);
  }
  LPoly(long v) : LPoly(Rat(v)) {}
  LPoly(int v) : LPoly(Rat(v)) {}

  static LPoly lambda() {
    LPoly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /* degree in lambda; -1 for the zero polynomial */
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rat(0);
  }
  /* constant term, i.e. the value at lambda = 0 */
  Rat at_zero() const { return coeff(0); }
  bool is_constant() const { return c_.size() <= 1; }

  LPoly& operator+=(const LPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  LPoly& operator-=(const LPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator-(const LPoly& a) {
    LPoly r;
    r.c_.reserve(a.c_.size());
    for (const auto& x : a.c_) r.c_.push_back(-x);
    return r;
  }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  friend LPoly operator*(const Rat& s, const LPoly& a) {
    if (s == 0) return {};
    LPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  /* division by a nonzero rational scalar */
  [[nodiscard]] LPoly div(const Rat& s) const {
    if (s == 0) fail_invariant("LPoly: division by zero scalar");
    LPoly r = *this;
    for (auto& x : r.c_) x /= s;
    return r;
  }

  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[k] multiplies lambda^k; no trailing zeros
};

}  // namespace qdm
