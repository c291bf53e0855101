#include "qdm/mirror.hpp"

#include <string>

#include "qdm/errors.hpp"

namespace qdm {

namespace {

std::string mono_tag(const IVec& d) {
  std::string s = "q^(";
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(d[t]);
  }
  return s + ")";
}

/* The canonical connection and everything derived from it is hbar-free;
 * entries are plain Q[lambda] scalars sitting at hbar^0. */
LPoly h0_entry(const HScal& e, const char* where) {
  LPoly out;
  for (const auto& [h, c] : e) {
    if (c.is_zero()) continue;
    if (h != 0) fail_invariant(std::string("ResidualHbar: ") + where);
    out = c;
  }
  return out;
}

SerV sv_mul(const CohoRing& ring, const SerV& x, const SerV& y) {
  SerV out(x.box);
  IVec d(x.box.size());
  for (const auto& [d1, v1] : x.coef)
    for (const auto& [d2, v2] : y.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (!out.in_box(d)) continue;
      out.add(d, hl_mul(ring, v1, v2));
    }
  out.trim();
  return out;
}

}  // namespace

MirrorData extract_mirror(const CohoRing& ring, const ConnectionSet& canon,
                          const SerM& splus) {
  const int r = ring.ts.r;
  for (int a = 0; a < r; ++a)
    if (ring.ts.deg_q[a] < 0)
      fail_nef("NefViolated: deg q^" + std::to_string(a + 1) + " = " +
               std::to_string(ring.ts.deg_q[a]) +
               " < 0, flat coordinates are not defined");
  if (static_cast<int>(canon.omega.size()) != r || !canon.hbar_free)
    fail_invariant("mirror extraction needs the hbar-free connection");

  const IVec& box = canon.omega[0].box;
  std::vector<SerL> Fa(r, SerL(box));
  std::vector<std::vector<SerL>> G(r, std::vector<SerL>(r, SerL(box)));
  for (int a = 0; a < r; ++a) {
    for (const auto& [d, m] : canon.omega[a].coef) {
      for (int i = 0; i < ring.dim; ++i) {
        LPoly v = h0_entry(m.at(i, 0), "connection column");
        if (v.is_zero()) continue;
        if (i == 0) {
          Fa[a].add(d, -v);
        } else if (i <= r) {
          G[a][i - 1].add(d, v);
        } else {
          fail_invariant("ColumnNotInSpan: direction " + std::to_string(a + 1) +
                         " has a degree>2 component in the unit column at " +
                         mono_tag(d));
        }
      }
    }
  }

  MirrorData mir;
  mir.F = log_integrate(Fa);
  mir.dhat.resize(r);
  for (int b = 0; b < r; ++b) {
    std::vector<SerL> g(r);
    for (int a = 0; a < r; ++a) {
      g[a] = G[a][b];
      if (a == b) g[a] = ser_sub(g[a], ser_one(box));
    }
    mir.dhat[b] = log_integrate(g);
  }
  mir.delta = reverse_coordinates(mir.dhat);

  mir.f = SerL(box);
  for (const auto& [d, m] : splus.coef) {
    for (int i = 1; i < ring.dim; ++i)
      if (!hs_is_zero(m.at(i, 0)))
        fail_invariant("frame factor: gauge image of the unit is not scalar at " +
                       mono_tag(d));
    for (const auto& [h, c] : m.at(0, 0)) {
      if (c.is_zero()) continue;
      if (h != 0)
        fail_invariant("frame factor: gauge image of the unit carries hbar at " +
                       mono_tag(d));
      mir.f.add(d, c);
    }
  }
  const LPoly* f0 = mir.f.find(IVec(box.size(), 0));
  if (!f0 || !(*f0 == LPoly(1)))
    fail_invariant("frame factor does not start at 1");
  return mir;
}

ConnectionSet flat_connection(const CohoRing& ring, const ConnectionSet& canon,
                              const MirrorData& mir) {
  const int r = ring.ts.r;
  const IVec& box = canon.omega[0].box;
  const IVec zero(box.size(), 0);

  std::vector<SerM> sub(r);
  for (int b = 0; b < r; ++b) sub[b] = substitute(canon.omega[b], mir.delta);
  SerL fhat = substitute(mir.F, mir.delta);

  ConnectionSet out;
  out.hbar_free = true;
  out.omega.resize(r);
  for (int a = 1; a <= r; ++a) {
    SerM acc(box);
    for (int b = 1; b <= r; ++b) {
      SerL jac = ser_qd(mir.delta[b - 1], a);
      if (a == b) jac = ser_add(jac, ser_one(box));
      acc = ser_add(acc, ser_lmul(jac, sub[b - 1]));
    }
    acc = ser_add(acc, ser_lmul(ser_qd(fhat, a), ser_id(box, ring.dim)));
    acc.trim();
    out.omega[a - 1] = std::move(acc);
  }

  for (int a = 1; a <= r; ++a) {
    if (!out.omega[a - 1].find(zero))
      fail_invariant("CompatibilityFailed: direction " + std::to_string(a) +
                     " at " + mono_tag(zero));
    for (const auto& [d, m] : out.omega[a - 1].coef) {
      const bool dzero = (d == zero);
      for (int i = 0; i < ring.dim; ++i) {
        LPoly v = h0_entry(m.at(i, 0), "flat connection column");
        LPoly want = (dzero && i == a) ? LPoly(1) : LPoly();
        if (!(v == want))
          fail_invariant("CompatibilityFailed: direction " + std::to_string(a) +
                         " at " + mono_tag(d));
      }
    }
  }
  return out;
}

SerL three_point(const CohoRing& ring, const std::vector<std::vector<LPoly>>& gram,
                 const ConnectionSet& flat, int a, int j, int k) {
  const SerM& om = flat.omega[a - 1];
  SerL out(om.box);
  for (const auto& [d, m] : om.coef) {
    LPoly val;
    for (int i = 0; i < ring.dim; ++i) {
      LPoly c = h0_entry(m.at(i, j), "product table entry");
      if (!c.is_zero()) val += c * gram[i][k];
    }
    out.add(d, val);
  }
  return out;
}

SerV canonical_j(const CohoRing& ring, const SerV& j, const MirrorData& mir) {
  const IVec& box = j.box;
  const IVec zero(box.size(), 0);
  const int r = ring.ts.r;

  SerV jhat = substitute(j, mir.delta);
  SerL fhat = substitute(mir.f, mir.delta);
  SerL bigf = substitute(mir.F, mir.delta);

  /* arg = (F + sum_a delta^a p_a)/hbar, then its finite exponential */
  SerV arg(box);
  for (const auto& [d, c] : bigf.coef) {
    CohoClass t(ring.dim);
    axpy(t, c, ring.unit());
    HLaurent h;
    h[-1] = std::move(t);
    arg.add(d, h);
  }
  for (int a = 1; a <= r; ++a)
    for (const auto& [d, c] : mir.delta[a - 1].coef) {
      CohoClass t(ring.dim);
      axpy(t, c, ring.gen(a));
      HLaurent h;
      h[-1] = std::move(t);
      arg.add(d, h);
    }

  long total = 0;
  for (long c : box) total += c;
  SerV expf(box);
  expf.add(zero, hl_class(ring.unit()));
  SerV term = expf;
  for (long k = 1; k <= total; ++k) {
    term = sv_mul(ring, term, arg);
    term = ser_scale(LPoly(Rat(1, k)), term);
    if (term.is_zero()) break;
    expf = ser_add(expf, term);
  }

  SerV jc = ser_lmul(fhat, sv_mul(ring, expf, jhat));
  jc.trim();

  const HLaurent* v0 = jc.find(zero);
  bool unit_ok = false;
  if (v0) {
    auto it = v0->find(0);
    unit_ok = it != v0->end() && it->second == ring.unit();
  }
  if (!unit_ok)
    fail_invariant("AsymptoticsFailed: hbar^0 part is not the unit at " +
                   mono_tag(zero));
  for (const auto& [d, v] : jc.coef)
    for (const auto& [h, cls] : v) {
      if (cls.is_zero()) continue;
      if (h > 0)
        fail_invariant("AsymptoticsFailed: positive hbar power at " + mono_tag(d));
      if (h == 0 && !(d == zero))
        fail_invariant("AsymptoticsFailed: hbar^0 part at " + mono_tag(d));
      if (h == -1)
        for (int i = 0; i <= r; ++i)
          if (!cls.c[i].is_zero())
            fail_invariant("AsymptoticsFailed: hbar^{-1} " + ring.basis_name(i) +
                           " component at " + mono_tag(d));
    }
  return jc;
}

}  // namespace qdm
