#include "qdm/coho.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qdm/errors.hpp"

namespace qdm {

namespace {

void enum_rec(int r, int d, PExp& cur, int pos, std::vector<PExp>& out) {
  if (pos == r - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    enum_rec(r, d - k, cur, pos + 1, out);
  }
}

/* All degree-d monomials in p_1..p_r, descending lex (p_1 heaviest first). */
std::vector<PExp> monomials(int r, int d) {
  std::vector<PExp> out;
  PExp cur(r, 0);
  enum_rec(r, d, cur, 0, out);
  return out;
}

int total_deg(const PExp& e) { return std::accumulate(e.begin(), e.end(), 0); }

PolyQ poly_mul(const PolyQ& f, const PolyQ& g) {
  PolyQ h;
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) {
      PExp e(ef.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ef[k] + eg[k];
      h[e] += cf * cg;
    }
  return h;
}

PolyQ linear_form(const IVec& coef, int r) {
  PolyQ f;
  for (int a = 0; a < r; ++a)
    if (coef[a]) {
      PExp e(r, 0);
      e[a] = 1;
      f[e] = Rat(coef[a]);
    }
  return f;
}

}  // namespace

int CohoRing::basis_index(const PExp& e) const {
  for (int i = 0; i < dim; ++i)
    if (basis[i] == e) return i;
  return -1;
}

std::string CohoRing::basis_name(int i) const {
  const PExp& e = basis[i];
  std::ostringstream os;
  bool any = false;
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (!e[a]) continue;
    if (any) os << "*";
    os << "p" << (a + 1);
    if (e[a] > 1) os << "^" << e[a];
    any = true;
  }
  return any ? os.str() : "1";
}

CohoClass CohoRing::unit() const {
  CohoClass x(dim);
  x.c[0] = LPoly(1);
  return x;
}

CohoClass CohoRing::gen(int a) const {
  CohoClass x(dim);
  x.c[a] = LPoly(1);
  return x;
}

CohoClass CohoRing::nf(const PolyQ& f) const {
  CohoClass out(dim);
  for (const auto& [e, coef] : f) {
    if (coef == 0) continue;
    if (total_deg(e) > ts.n + 1) continue;  // above the Artinian socle
    int bi = basis_index(e);
    if (bi >= 0) {
      out.c[bi] += LPoly(coef);
    } else {
      auto it = reduce.find(e);
      if (it == reduce.end()) fail_invariant("normal form table miss");
      for (const auto& [idx, cc] : it->second) out.c[idx] += LPoly(coef * cc);
    }
  }
  return out;
}

CohoClass CohoRing::nf(const PolyL& f) const {
  CohoClass out(dim);
  for (const auto& [e, coef] : f) {
    if (coef.is_zero()) continue;
    if (total_deg(e) > ts.n + 1) continue;
    int bi = basis_index(e);
    if (bi >= 0) {
      out.c[bi] += coef;
    } else {
      auto it = reduce.find(e);
      if (it == reduce.end()) fail_invariant("normal form table miss");
      for (const auto& [idx, cc] : it->second) out.c[idx] += cc * coef;
    }
  }
  return out;
}

CohoClass CohoRing::mul(const CohoClass& x, const CohoClass& y) const {
  CohoClass out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y.c[j].is_zero()) continue;
      LPoly f = x.c[i] * y.c[j];
      for (int k = 0; k < dim; ++k)
        if (cup[i][j][k] != 0) out.c[k] += cup[i][j][k] * f;
    }
  }
  return out;
}

CohoClass CohoRing::pmul(int a, const CohoClass& x) const {
  CohoClass out(dim);
  for (int j = 0; j < dim; ++j) {
    if (x.c[j].is_zero()) continue;
    for (int k = 0; k < dim; ++k)
      if (cup[a][j][k] != 0) out.c[k] += cup[a][j][k] * x.c[j];
  }
  return out;
}

CohoClass CohoRing::umul(int i, const CohoClass& x) const {
  CohoClass out(dim);
  for (int a = 0; a < ts.r; ++a)
    if (ts.m[i - 1][a]) out += Rat(ts.m[i - 1][a]) * pmul(a + 1, x);
  return out;
}

CohoClass CohoRing::vmul(int j, const CohoClass& x) const {
  CohoClass out(dim);
  for (int a = 0; a < ts.r; ++a)
    if (ts.l[j - 1][a]) out += Rat(ts.l[j - 1][a]) * pmul(a + 1, x);
  return out;
}

LPoly CohoRing::integrate(const CohoClass& x) const {
  return x.c[point_idx].div(point_scale);
}

CohoRing build_ring(const ToricSuperspace& ts) {
  CohoRing R;
  R.ts = ts;
  R.top = ts.n;
  const int r = ts.r;
  const int n = ts.n;

  std::vector<PolyQ> gens;
  for (const auto& S : ts.nonfaces) {
    PolyQ g;
    g[PExp(r, 0)] = 1;
    for (int i : S) g = poly_mul(g, linear_form(ts.m[i - 1], r));
    gens.push_back(g);
  }

  std::vector<int> dims(n + 2, 0);
  for (int d = 0; d <= n + 1; ++d) {
    auto mons = monomials(r, d);  // descending lex
    const int M = static_cast<int>(mons.size());
    // Columns in ascending lex so row reduction pivots on the smallest
    // monomial of each relation; the surviving (larger) monomials become
    // basis elements, which keeps p_a itself standard in degree 1.
    std::map<PExp, int> col;
    for (int k = 0; k < M; ++k) col[mons[M - 1 - k]] = k;

    std::vector<std::vector<Rat>> rows;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const int k = static_cast<int>(ts.nonfaces[gi].size());
      if (k > d) continue;
      for (const auto& mu : monomials(r, d - k)) {
        std::vector<Rat> row(M);
        for (const auto& [e, cval] : gens[gi]) {
          PExp prod(r);
          for (int t = 0; t < r; ++t) prod[t] = mu[t] + e[t];
          row[col[prod]] += cval;
        }
        rows.push_back(std::move(row));
      }
    }

    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(M, false);
    std::size_t rank = 0;
    for (int c = 0; c < M && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      Rat p = rows[rank][c];
      for (int k = 0; k < M; ++k) rows[rank][k] /= p;
      for (std::size_t rr = 0; rr < rows.size(); ++rr) {
        if (rr == rank || rows[rr][c] == 0) continue;
        Rat f = rows[rr][c];
        for (int k = 0; k < M; ++k) rows[rr][k] -= f * rows[rank][k];
      }
      pivot_of_row.push_back(c);
      is_pivot[c] = true;
      ++rank;
    }

    // Standard monomials, listed descending (original mons order).
    std::map<int, int> col_to_basis;  // column -> global basis index
    for (int k = 0; k < M; ++k) {
      int c = M - 1 - k;  // descending scan: mons[k] sits in column M-1-k
      if (is_pivot[c]) continue;
      col_to_basis[c] = static_cast<int>(R.basis.size());
      R.basis.push_back(mons[k]);
      R.poly_deg.push_back(d);
      dims[d]++;
    }
    for (std::size_t rr = 0; rr < rank; ++rr) {
      int pc = pivot_of_row[rr];
      std::vector<std::pair<int, Rat>> expansion;
      for (int c = 0; c < M; ++c) {
        if (c == pc || rows[rr][c] == 0) continue;
        expansion.emplace_back(col_to_basis.at(c), -rows[rr][c]);
      }
      // recover the monomial of column pc
      R.reduce[mons[M - 1 - pc]] = std::move(expansion);
    }
  }

  R.dim = static_cast<int>(R.basis.size());
  if (dims[n] != 1)
    fail_validation("DimensionMismatch: top graded piece has dimension " +
                    std::to_string(dims[n]));
  if (dims[n + 1] != 0)
    fail_validation("DimensionMismatch: nonzero piece above the top degree");
  if (R.dim != static_cast<int>(ts.cones.size()))
    fail_validation("DimensionMismatch: total dimension " + std::to_string(R.dim) +
                    " != number of max cones " + std::to_string(ts.cones.size()));
  if (dims[1] != r) fail_validation("DimensionMismatch: degree-2 piece is not free on the p_a");

  R.cup.assign(R.dim, std::vector<std::vector<Rat>>(R.dim));
  for (int i = 0; i < R.dim; ++i)
    for (int j = 0; j < R.dim; ++j) {
      PExp e(r);
      for (int t = 0; t < r; ++t) e[t] = R.basis[i][t] + R.basis[j][t];
      PolyQ f;
      f[e] = 1;
      CohoClass z = R.nf(f);
      std::vector<Rat> v(R.dim);
      for (int k = 0; k < R.dim; ++k) {
        if (!z.c[k].is_constant()) fail_invariant("lambda leaked into cup table");
        v[k] = z.c[k].at_zero();
      }
      R.cup[i][j] = std::move(v);
    }

  for (int i = 0; i < R.dim; ++i)
    if (R.poly_deg[i] == n) R.point_idx = i;

  CohoClass pt;
  for (std::size_t ci = 0; ci < ts.cones.size(); ++ci) {
    PolyQ f;
    f[PExp(r, 0)] = 1;
    for (int i : ts.cones[ci]) f = poly_mul(f, linear_form(ts.m[i - 1], r));
    CohoClass z = R.nf(f);
    if (ci == 0)
      pt = z;
    else if (!(z == pt))
      fail_invariant("point class differs across max cones");
  }
  for (int k = 0; k < R.dim; ++k)
    if (k != R.point_idx && !pt.c[k].is_zero())
      fail_invariant("point class is not concentrated in the top degree");
  if (pt.c[R.point_idx].is_zero() || !pt.c[R.point_idx].is_constant())
    fail_invariant("degenerate point class");
  R.point_scale = pt.c[R.point_idx].at_zero();

  return R;
}

CohoClass euler_class(const CohoRing& ring, LambdaMode mode) {
  const int r = ring.ts.r;
  PolyL f;
  f[PExp(r, 0)] = LPoly(1);
  for (int j = 1; j <= ring.ts.ell; ++j) {
    PolyL lin;
    for (int a = 0; a < r; ++a)
      if (ring.ts.l[j - 1][a]) {
        PExp e(r, 0);
        e[a] = 1;
        lin[e] = LPoly(Rat(ring.ts.l[j - 1][a]));
      }
    if (mode == LambdaMode::Symbolic) lin[PExp(r, 0)] -= LPoly::lambda();
    PolyL g;
    for (const auto& [ef, cf] : f)
      for (const auto& [eg, cg] : lin) {
        PExp e(r);
        for (int t = 0; t < r; ++t) e[t] = ef[t] + eg[t];
        g[e] += cf * cg;
      }
    f = std::move(g);
  }
  return ring.nf(f);
}

std::vector<std::vector<LPoly>> pairing_matrix(const CohoRing& ring, LambdaMode mode) {
  CohoClass eu = euler_class(ring, mode);
  std::vector<std::vector<LPoly>> g(ring.dim, std::vector<LPoly>(ring.dim));
  for (int i = 0; i < ring.dim; ++i)
    for (int j = 0; j < ring.dim; ++j) {
      CohoClass tij(ring.dim);
      for (int k = 0; k < ring.dim; ++k) tij.c[k] = LPoly(ring.cup[i][j][k]);
      g[i][j] = ring.integrate(ring.mul(tij, eu));
    }
  return g;
}

LPoly pair_classes(const CohoRing& ring, const CohoClass& x, const CohoClass& y,
                   LambdaMode mode) {
  return ring.integrate(ring.mul(ring.mul(x, y), euler_class(ring, mode)));
}

}  // namespace qdm
