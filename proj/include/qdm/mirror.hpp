#pragma once

#include <vector>

#include "qdm/dmodule.hpp"

namespace qdm {

/* Coordinate change to the flat frame.  Both directions are kept:
 * log qhat^b = log q^b + dhat^b(q)  (as integrated from the connection)
 * log q^a = log qhat^a + delta^a(qhat)  (its reversion, used to substitute) */
struct MirrorData {
  SerL F;                   // inhomogeneous potential, series in q
  std::vector<SerL> dhat;   // inverse map shifts
  std::vector<SerL> delta;  // forward map shifts
  SerL f;                   // scalar frame factor, series in q, f(0)=1
};

/* Read F_a and G_a^b off the T_0-columns of the canonical connection and
 * integrate; the frame factor f comes from S_plus(T_0) = f T_0. */
MirrorData extract_mirror(const CohoRing& ring, const ConnectionSet& canon,
                          const SerM& splus);

/* Push the canonical connection to flat coordinates:
 * Omega_flat_a = sum_b J_a^b (Omega_b after substitution) + (qhat^a d_a
 * Fhat) id, with J the log-Jacobian of the forward map.  The T_0 column of
 * the result must be exactly p_a. */
ConnectionSet flat_connection(const CohoRing& ring, const ConnectionSet& canon,
                              const MirrorData& mir);

/* <p_a * T_j, T_k> as a q-series (hbar-free by construction). */
SerL three_point(const CohoRing& ring, const std::vector<std::vector<LPoly>>& gram,
                 const ConnectionSet& flat, int a, int j, int k);

/* J_can = f e^{F/hbar} e^{sum_a p_a delta^a/hbar} J(q(qhat)); the prefactor
 * e^{p log qhat/hbar} stays symbolic.  Asserts the canonical asymptotics:
 * no positive hbar powers, hbar^0 part = T_0 at qhat = 0 only, and the
 * hbar^{-1} part has no scalar or p_a components. */
SerV canonical_j(const CohoRing& ring, const SerV& j, const MirrorData& mir);

}  // namespace qdm
