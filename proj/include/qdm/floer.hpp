#pragma once

#include <map>
#include <vector>

#include "qdm/matseries.hpp"

namespace qdm {

/* Polynomial in P_1..P_r and hbar, coefficients in Q[lambda]. */
struct PKey {
  PExp p;
  int h = 0;
  bool operator<(const PKey& o) const { return p != o.p ? p < o.p : h < o.h; }
  bool operator==(const PKey& o) const { return p == o.p && h == o.h; }
};
using PPoly = std::map<PKey, LPoly>;

PPoly pp_one(int r);
PPoly pp_gen(int r, int a);  // P_a, 1-based
PPoly pp_from_exp(int r, const PExp& e);
void pp_addin(PPoly& x, const PPoly& y);
PPoly pp_mul(const PPoly& x, const PPoly& y);
PPoly pp_scale(const LPoly& s, const PPoly& x);
PPoly pp_flip(const PPoly& x);  // hbar -> -hbar
bool pp_is_zero(const PPoly& x);

/* T(P)·Delta_d, the window-shifted cycle. */
struct FloerCycle {
  PPoly T;
  IVec shift;
};

/* sum_a c[a] P_a - nu hbar - [lam] lambda */
struct LinFactor {
  IVec c;
  long nu = 0;
  bool lam = false;
};

struct PFRelation {
  IVec d;
  std::vector<LinFactor> left;   // word applied to Delta_d
  std::vector<LinFactor> right;  // word applied to Delta
};

PPoly linfactor_poly(const LinFactor& f, int r);

/* Most negative hbar exponent a localization coefficient can legally carry
 * inside the box; anything below detects a runaway expansion. */
long hbar_window_floor(const ToricSuperspace& ts, const IVec& box);

class FloerModel {
 public:
  FloerModel(const CohoRing& ring, LambdaMode mode);

  const CohoRing& ring() const { return *R; }
  LambdaMode lambda_mode() const { return mode_; }

  /* i_d^*(T(P)Delta / Delta_d): T at P = p + d hbar, then the telescoped
   * window ratio C_i/D_j factors.  Accepts any integer d (the vanishing
   * cases come through the C_i polynomial factors). */
  HLaurent localization_coefficient(const IVec& d, const PPoly& T,
                                    const IVec& box) const;

  /* Xi(T(P)Delta_{d0}) = q^{d0} sum_e q^e i_{e+d0}^*(T)·C(e)·D(e). */
  SerV xi(const FloerCycle& cyc, const IVec& box) const;

  SerM s_inverse_matrix(const IVec& box) const;
  SerV j_function_vector(const IVec& box) const;  // Xi(Delta) = S^{-1}(1)

  PFRelation picard_fuchs(const IVec& d) const;
  bool verify_pf(const PFRelation& rel, const IVec& box) const;

  /* (alpha, beta) = integral of Xi-bar(alpha) cup Xi(beta) cup Euler;
   * window-0 cycles only; coefficients must be polynomial in hbar. */
  SerS floer_pairing(const FloerCycle& alpha, const FloerCycle& beta,
                     const IVec& box) const;

 private:
  HLaurent eval_at(const PPoly& T, const IVec& d) const;
  HLaurent window_ratio(const IVec& e) const;  // prod C_i(e) prod D_j(e)
  HLaurent loc_core(const IVec& rel, const IVec& abs, const PPoly& T) const;

  const CohoRing* R;
  LambdaMode mode_;
  std::vector<CohoClass> u_cls;  // divisor classes u_i
  std::vector<CohoClass> v_cls;  // bundle classes v_j
  CohoClass euler_;
};

}  // namespace qdm
