#pragma once

#include <vector>

#include "qdm/matseries.hpp"

namespace qdm {

/* Connection matrices Omega_a, column convention: Omega_a maps the basis
 * vector T_j to sum_i (Omega_a)_{ij} T_i. */
struct ConnectionSet {
  std::vector<SerM> omega;
  bool hbar_free = false;
};

/* S = plus * minus with plus supported on hbar >= 0 and minus = id plus
 * strictly negative hbar powers. */
struct BirkhoffPair {
  SerM plus;
  SerM minus;
};

/* Cup matrix of p_a (1-based) over the ring basis. */
Mat pcup_matrix(const CohoRing& ring, int a);

/* Omega_a = S (hbar q^a d_a S^{-1} + (p_a cup) S^{-1}), from the inverse
 * S-matrix; asserts Omega_a(0) = p_a cup. */
ConnectionSet connection_from_s(const CohoRing& ring, const SerM& sinv);

BirkhoffPair birkhoff_factorize(const SerM& s);

/* Gauge by S_plus: hat Omega_a = S_+^{-1} Omega_a S_+ + S_+^{-1} hbar q^a
 * d_a S_+, which must come out hbar-free. */
ConnectionSet canonical_connection(const ConnectionSet& conn, const BirkhoffPair& pair);

/* Independent construction of the flat-section matrix from an hbar-free
 * connection, variable by variable; returns the unique solution with S(0)=id
 * and no positive hbar powers (it must reproduce Birkhoff's minus factor). */
SerM solve_s_recursive(const CohoRing& ring, const ConnectionSet& canon,
                       const IVec& box);

/* q^a d_a Omega_b - q^b d_b Omega_a + hbar^{-1}[Omega_a, Omega_b] = 0 */
bool flatness_ok(const ConnectionSet& conn);

/* minus(-hbar)^T g minus = g for the superspace pairing g */
bool unitary_ok(const SerM& minus, const std::vector<std::vector<LPoly>>& gram);

/* g hatOmega_a = hatOmega_a^T g */
bool self_adjoint_ok(const ConnectionSet& canon,
                     const std::vector<std::vector<LPoly>>& gram);

}  // namespace qdm
