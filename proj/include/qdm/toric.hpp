#pragma once

#include <string>
#include <vector>

#include "qdm/lpoly.hpp"

namespace qdm {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

/* Fan data plus the two presentations that drive everything else:
 *   u_i = sum_a m[i][a] p_a   (toric divisor classes in the chosen nef basis)
 *   v_j = sum_a l[j][a] p_a   (bundle splitting classes; entries >= 0)
 * deg_q[a] = 2 (sum_i m[i][a] - sum_j l[j][a]).
 */
struct ToricSuperspace {
  int n = 0;    // dimension of the fan
  int N = 0;    // number of rays
  int r = 0;    // N - n = Picard rank
  int ell = 0;  // number of bundle summands
  IMat rays;                             // N x n
  std::vector<std::vector<int>> cones;   // max cones, 1-based ray indices, sorted
  IMat m;                                // N x r
  IMat l;                                // ell x r
  IVec deg_q;                            // r entries
  std::vector<std::vector<int>> nonfaces;  // minimal non-faces, sorted

  long pair_u(int i, const IVec& d) const {  // <u_i, d>
    long s = 0;
    for (int a = 0; a < r; ++a) s += m[i][a] * d[a];
    return s;
  }
  long pair_v(int j, const IVec& d) const {  // <v_j, d>
    long s = 0;
    for (int a = 0; a < r; ++a) s += l[j][a] * d[a];
    return s;
  }
};

struct ValidationItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool all_ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.ok) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
    return "";
  }
};

/* Smoothness (every max cone a Z-basis), completeness (every facet in exactly
 * two max cones), primitivity of rays. */
ValidationReport validate_fan(const IMat& rays, const std::vector<std::vector<int>>& cones);

/* m^T . rays = 0, Z-surjectivity (Smith form all 1), and nef-ness of each
 * basis class p_a over every max cone. */
ValidationReport validate_gale(const IMat& rays, const IMat& m,
                               const std::vector<std::vector<int>>& cones);

/* Minimal subsets of {1..N} spanning no cone of the fan (primitive
 * collections); these index the Stanley-Reisner relations prod u_i = 0. */
std::vector<std::vector<int>> minimal_nonfaces(const std::vector<std::vector<int>>& cones, int N);

IVec degree_vector(const IMat& m, const IMat& l);

/* Validates everything and assembles the value; throws Validation errors. */
ToricSuperspace make_superspace(const IMat& rays, const std::vector<std::vector<int>>& cones,
                                const IMat& m, const IMat& l);

}  // namespace qdm
