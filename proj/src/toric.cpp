#include "qdm/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qdm/errors.hpp"

namespace qdm {

namespace {

std::string show_set(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

long gcd_abs(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

/* Exact determinant of a small integer matrix via rational Gauss. */
Rat rational_det(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t rrow = c + 1; rrow < n; ++rrow) {
      if (a[rrow][c] == 0) continue;
      Rat f = a[rrow][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[rrow][k] -= f * a[c][k];
    }
  }
  return det;
}

/* Invariant factors of an integer matrix (Smith normal form diagonal). */
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> inv;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the lower-right block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(a[pi], a[t]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class qz = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= qz * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[i], a[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class qz = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= qz * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
          clean = false;
        }
      }
      if (clean) break;
    }
    inv.push_back(abs(a[t][t]));
    ++t;
  }
  return inv;
}

}  // namespace

ValidationReport validate_fan(const IMat& rays, const std::vector<std::vector<int>>& cones) {
  ValidationReport rep;
  const int N = static_cast<int>(rays.size());
  const int n = N ? static_cast<int>(rays[0].size()) : 0;

  for (const auto& x : rays)
    if (static_cast<int>(x.size()) != n || n == 0) {
      rep.items.push_back({"shape", false, "rays must be a nonempty rectangular list"});
      return rep;
    }

  {
    ValidationItem it{"primitive_rays", true, ""};
    for (int i = 0; i < N && it.ok; ++i) {
      long g = 0;
      for (long x : rays[i]) g = gcd_abs(g, x);
      if (g != 1) {
        it.ok = false;
        it.detail = "NonPrimitiveRay: ray " + std::to_string(i + 1);
      }
    }
    rep.items.push_back(it);
  }

  {
    ValidationItem it{"cones_well_formed", true, ""};
    std::set<std::vector<int>> seen;
    for (const auto& c : cones) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      if (static_cast<int>(s.size()) != n ||
          std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 ||
          s.back() > N || !seen.insert(s).second) {
        it.ok = false;
        it.detail = "cone " + show_set(c) + " is not an n-element subset of {1.." +
                    std::to_string(N) + "} (or repeats)";
        break;
      }
    }
    rep.items.push_back(it);
  }

  {
    ValidationItem it{"smooth", true, ""};
    for (const auto& c : cones) {
      if (static_cast<int>(c.size()) != n) continue;
      if (std::any_of(c.begin(), c.end(), [&](int i) { return i < 1 || i > N; }))
        continue;  // flagged by cones_well_formed
      std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) a[i][k] = Rat(rays[c[i] - 1][k]);
      Rat d = rational_det(a);
      if (d != 1 && d != -1) {
        it.ok = false;
        it.detail = "NotSmooth: cone " + show_set(c) + " has |det| != 1";
        break;
      }
    }
    rep.items.push_back(it);
  }

  {
    /* Completeness for a simplicial fan presented by its max cones: every
     * facet lies in exactly two of them. */
    ValidationItem it{"complete", true, ""};
    std::map<std::vector<int>, int> facet_count;
    for (const auto& c : cones) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        facet_count[f]++;
      }
      if (s.empty()) facet_count[{}]++;
    }
    for (const auto& [f, cnt] : facet_count) {
      if (cnt != 2) {
        it.ok = false;
        it.detail = "NotComplete: facet " + show_set(f) + " lies in " +
                    std::to_string(cnt) + " max cones";
        break;
      }
    }
    rep.items.push_back(it);
  }

  return rep;
}

ValidationReport validate_gale(const IMat& rays, const IMat& m,
                               const std::vector<std::vector<int>>& cones) {
  ValidationReport rep;
  const int N = static_cast<int>(rays.size());
  const int n = N ? static_cast<int>(rays[0].size()) : 0;
  const int r = N ? static_cast<int>(m.empty() ? 0 : m[0].size()) : 0;

  {
    ValidationItem it{"gale_dual", true, ""};
    if (static_cast<int>(m.size()) != N || r != N - n || r <= 0) {
      it.ok = false;
      it.detail = "NotGaleDual: m must be N x (N-n)";
    }
    for (const auto& row : m)
      if (it.ok && static_cast<int>(row.size()) != r) {
        it.ok = false;
        it.detail = "NotGaleDual: ragged presentation matrix";
      }
    for (int a = 0; a < r && it.ok; ++a)
      for (int k = 0; k < n && it.ok; ++k) {
        long s = 0;
        for (int i = 0; i < N; ++i) s += m[i][a] * rays[i][k];
        if (s != 0) {
          it.ok = false;
          it.detail = "NotGaleDual: column " + std::to_string(a + 1) +
                      " is not a relation among the rays";
        }
      }
    rep.items.push_back(it);
  }
  if (!rep.all_ok()) return rep;

  {
    ValidationItem it{"surjective_over_Z", true, ""};
    std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(r));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < r; ++j) a[i][j] = m[i][j];
    auto inv = smith_invariants(a);
    if (static_cast<int>(inv.size()) != r) {
      it.ok = false;
      it.detail = "NotSurjectiveOverZ: rank(m) < r";
    } else {
      for (const auto& d : inv)
        if (d != 1) {
          it.ok = false;
          it.detail = "NotSurjectiveOverZ: invariant factor " + d.get_str();
          break;
        }
    }
    rep.items.push_back(it);
  }
  if (!rep.all_ok()) return rep;

  {
    /* p_a nef: over each max cone I, p_a is a nonnegative combination of
     * {u_i : i not in I}.  Those u_i must form a basis of Q^r. */
    ValidationItem it{"basis_nef", true, ""};
    for (const auto& c : cones) {
      if (!it.ok) break;
      std::vector<int> comp;
      std::set<int> inc(c.begin(), c.end());
      for (int i = 1; i <= N; ++i)
        if (!inc.count(i)) comp.push_back(i);
      if (static_cast<int>(comp.size()) != r) continue;  // fan errors reported elsewhere
      // Solve [u_i : i in comp]^T c = p_a for every a at once: invert the r x r
      // matrix whose rows are the u_i.
      std::vector<std::vector<Rat>> aug(r, std::vector<Rat>(2 * r, Rat(0)));
      for (int row = 0; row < r; ++row) {
        for (int a = 0; a < r; ++a) aug[row][a] = Rat(m[comp[row] - 1][a]);
        aug[row][r + row] = 1;
      }
      bool singular = false;
      for (int col = 0; col < r && !singular; ++col) {
        int piv = col;
        while (piv < r && aug[piv][col] == 0) ++piv;
        if (piv == r) {
          singular = true;
          break;
        }
        std::swap(aug[piv], aug[col]);
        Rat p = aug[col][col];
        for (int k = 0; k < 2 * r; ++k) aug[col][k] /= p;
        for (int row = 0; row < r; ++row) {
          if (row == col || aug[row][col] == 0) continue;
          Rat f = aug[row][col];
          for (int k = 0; k < 2 * r; ++k) aug[row][k] -= f * aug[col][k];
        }
      }
      if (singular) {
        it.ok = false;
        it.detail = "complement classes over cone " + show_set(c) + " are not a basis";
        break;
      }
      // With U the matrix whose rows are the u_{comp[row]}, the expansion
      // p_a = sum_row c_row u_{comp[row]} solves U^T c = e_a, so
      // c_row = (U^{-1})[a][row].  aug[:,r..2r) now holds U^{-1}.
      for (int a = 0; a < r && it.ok; ++a)
        for (int row = 0; row < r; ++row)
          if (aug[a][r + row] < 0) {
            it.ok = false;
            it.detail = "BasisNotNef: p_" + std::to_string(a + 1) + " over cone " +
                        show_set(c);
            break;
          }
    }
    rep.items.push_back(it);
  }

  return rep;
}

std::vector<std::vector<int>> minimal_nonfaces(const std::vector<std::vector<int>>& cones,
                                               int N) {
  if (N > 30) fail_validation("minimal_nonfaces: too many rays");
  std::vector<unsigned> cone_masks;
  for (const auto& c : cones) {
    unsigned msk = 0;
    for (int i : c) msk |= 1u << (i - 1);
    cone_masks.push_back(msk);
  }
  auto is_face = [&](unsigned s) {
    for (unsigned cm : cone_masks)
      if ((s & cm) == s) return true;
    return false;
  };
  std::vector<unsigned> found;
  std::vector<std::vector<int>> out;
  // enumerate by size so minimality is a subset check against earlier finds
  for (int size = 1; size <= N; ++size) {
    for (unsigned s = 1; s < (1u << N); ++s) {
      if (__builtin_popcount(s) != size || is_face(s)) continue;
      bool minimal = true;
      for (unsigned f : found)
        if ((f & s) == f) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      found.push_back(s);
      std::vector<int> set;
      for (int i = 0; i < N; ++i)
        if (s & (1u << i)) set.push_back(i + 1);
      out.push_back(set);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IVec degree_vector(const IMat& m, const IMat& l) {
  const int r = m.empty() ? 0 : static_cast<int>(m[0].size());
  IVec deg(r, 0);
  for (int a = 0; a < r; ++a) {
    long s = 0;
    for (const auto& row : m) s += row[a];
    for (const auto& row : l) s -= row[a];
    deg[a] = 2 * s;
  }
  return deg;
}

ToricSuperspace make_superspace(const IMat& rays, const std::vector<std::vector<int>>& cones,
                                const IMat& m, const IMat& l) {
  if (rays.empty()) fail_validation("no rays");
  const int N = static_cast<int>(rays.size());
  const int n = static_cast<int>(rays[0].size());
  for (const auto& x : rays)
    if (static_cast<int>(x.size()) != n) fail_validation("ragged ray list");

  auto fan_rep = validate_fan(rays, cones);
  if (!fan_rep.all_ok()) fail_validation(fan_rep.first_failure());
  auto gale_rep = validate_gale(rays, m, cones);
  if (!gale_rep.all_ok()) fail_validation(gale_rep.first_failure());

  for (const auto& row : l) {
    if (static_cast<int>(row.size()) != N - n)
      fail_validation("bundle row has wrong length");
    for (long x : row)
      if (x < 0) fail_validation("bundle presentation must have entries >= 0");
  }

  ToricSuperspace ts;
  ts.n = n;
  ts.N = N;
  ts.r = N - n;
  ts.ell = static_cast<int>(l.size());
  ts.rays = rays;
  ts.cones = cones;
  for (auto& c : ts.cones) std::sort(c.begin(), c.end());
  ts.m = m;
  ts.l = l;
  ts.deg_q = degree_vector(m, l);
  ts.nonfaces = minimal_nonfaces(cones, N);
  return ts;
}

}  // namespace qdm
