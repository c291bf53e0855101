#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdm/lpoly.hpp"
#include "qdm/toric.hpp"

namespace qdm {

enum class LambdaMode { Zero, Symbolic };

using PExp = std::vector<int>;       // exponent vector in p_1..p_r
using PolyQ = std::map<PExp, Rat>;   // rational polynomial in the p_a
using PolyL = std::map<PExp, LPoly>; // with coefficients in Q[lambda]

/* Element of the quotient ring in the fixed monomial basis T_0..T_s,
 * coefficients in Q[lambda]. */
struct CohoClass {
  std::vector<LPoly> c;

  CohoClass() = default;
  explicit CohoClass(int dim) : c(dim) {}

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  CohoClass& operator+=(const CohoClass& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  CohoClass& operator-=(const CohoClass& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  CohoClass& operator*=(const LPoly& s) {
    for (auto& x : c) x = x * s;
    return *this;
  }
  friend CohoClass operator+(CohoClass a, const CohoClass& b) { return a += b; }
  friend CohoClass operator-(CohoClass a, const CohoClass& b) { return a -= b; }
  friend CohoClass operator*(const LPoly& s, CohoClass a) { return a *= s; }
  CohoClass operator-() const {
    CohoClass r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  bool operator==(const CohoClass& o) const { return c == o.c; }
  bool operator!=(const CohoClass& o) const { return !(*this == o); }
};

/* H*(X;Q) as a graded quotient of Q[p_1..p_r].  Basis monomials survive a
 * per-degree elimination against the non-face relations; within each degree
 * they are listed in descending lex order (p_1 > ... > p_r), so T_0 = 1 and
 * T_a = p_a for 1 <= a <= r. */
struct CohoRing {
  ToricSuperspace ts;
  int dim = 0;            // s + 1
  int top = 0;            // top polynomial degree = n
  std::vector<PExp> basis;
  std::vector<int> poly_deg;  // polynomial degree of each T_i
  // eliminated monomial (degree <= n+1) -> expansion over basis indices
  std::map<PExp, std::vector<std::pair<int, Rat>>> reduce;
  // cup[i][j] = coefficients of T_i T_j over the basis
  std::vector<std::vector<std::vector<Rat>>> cup;
  int point_idx = -1;     // basis index of the top monomial
  Rat point_scale = 1;    // point class = point_scale * T_{point_idx}

  int degree(int i) const { return 2 * poly_deg[i]; }  // cohomological
  int basis_index(const PExp& e) const;
  std::string basis_name(int i) const;

  CohoClass zero() const { return CohoClass(dim); }
  CohoClass unit() const;
  CohoClass gen(int a) const;  // p_a, 1-based

  CohoClass nf(const PolyQ& f) const;
  CohoClass nf(const PolyL& f) const;
  CohoClass mul(const CohoClass& x, const CohoClass& y) const;
  CohoClass pmul(int a, const CohoClass& x) const;  // p_a cup x, 1-based
  CohoClass umul(int i, const CohoClass& x) const;  // u_i cup x, 1-based ray
  CohoClass vmul(int j, const CohoClass& x) const;  // v_j cup x, 1-based row
  LPoly integrate(const CohoClass& x) const;
};

CohoRing build_ring(const ToricSuperspace& ts);

/* Euler_{S^1} of the bundle: prod_j (v_j - lambda), lambda kept or set to 0. */
CohoClass euler_class(const CohoRing& ring, LambdaMode mode);

/* <T_i, T_j> = integral of T_i T_j Euler_{S^1}(V). */
std::vector<std::vector<LPoly>> pairing_matrix(const CohoRing& ring, LambdaMode mode);

LPoly pair_classes(const CohoRing& ring, const CohoClass& x, const CohoClass& y,
                   LambdaMode mode);

}  // namespace qdm
