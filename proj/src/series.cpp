#include "qdm/series.hpp"

#include <sstream>

namespace qdm {

void hs_trim(HScal& x) {
  for (auto it = x.begin(); it != x.end();)
    it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

void hs_addin(HScal& x, const HScal& y) {
  for (const auto& [h, c] : y) {
    x[h] += c;
    if (x[h].is_zero()) x.erase(h);
  }
}

void hs_subin(HScal& x, const HScal& y) {
  for (const auto& [h, c] : y) {
    x[h] -= c;
    if (x[h].is_zero()) x.erase(h);
  }
}

HScal hs_mul(const HScal& x, const HScal& y) {
  HScal out;
  for (const auto& [h1, c1] : x)
    for (const auto& [h2, c2] : y) out[h1 + h2] += c1 * c2;
  hs_trim(out);
  return out;
}

HScal hs_scale(const LPoly& s, const HScal& x) {
  HScal out;
  if (s.is_zero()) return out;
  for (const auto& [h, c] : x) out[h] = s * c;
  hs_trim(out);
  return out;
}

HScal hs_neg(const HScal& x) {
  HScal out;
  for (const auto& [h, c] : x) out[h] = -c;
  return out;
}

bool hs_is_zero(const HScal& x) {
  for (const auto& [h, c] : x)
    if (!c.is_zero()) return false;
  return true;
}

HScal hs_const(const LPoly& c) {
  HScal out;
  if (!c.is_zero()) out[0] = c;
  return out;
}

HScal hs_hpow(int k) {
  HScal out;
  out[k] = LPoly(1);
  return out;
}

HScal hs_flip(const HScal& x) {
  HScal out;
  for (const auto& [h, c] : x) out[h] = (h % 2 == 0) ? c : -c;
  return out;
}

HScal hs_shift(const HScal& x, int k) {
  HScal out;
  for (const auto& [h, c] : x) out[h + k] = c;
  return out;
}

std::pair<HScal, HScal> hs_split(const HScal& x) {
  HScal plus, minus;
  for (const auto& [h, c] : x) (h >= 0 ? plus : minus)[h] = c;
  return {plus, minus};
}

void hl_trim(HLaurent& x) {
  for (auto it = x.begin(); it != x.end();)
    it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

void hl_addin(HLaurent& x, const HLaurent& y) {
  for (const auto& [h, v] : y) {
    auto it = x.find(h);
    if (it == x.end())
      x[h] = v;
    else {
      it->second += v;
      if (it->second.is_zero()) x.erase(it);
    }
  }
}

HLaurent hl_scale(const LPoly& s, const HLaurent& x) {
  HLaurent out;
  if (s.is_zero()) return out;
  for (const auto& [h, v] : x) {
    CohoClass w = v;
    w *= s;
    if (!w.is_zero()) out[h] = w;
  }
  return out;
}

HLaurent hl_scale_h(const HScal& s, const HLaurent& x) {
  HLaurent out;
  for (const auto& [hs, c] : s)
    for (const auto& [hx, v] : x) {
      CohoClass w = v;
      w *= c;
      auto it = out.find(hs + hx);
      if (it == out.end())
        out[hs + hx] = w;
      else
        it->second += w;
    }
  hl_trim(out);
  return out;
}

HLaurent hl_mul(const CohoRing& R, const HLaurent& x, const HLaurent& y) {
  HLaurent out;
  for (const auto& [h1, v1] : x)
    for (const auto& [h2, v2] : y) {
      CohoClass w = R.mul(v1, v2);
      if (w.is_zero()) continue;
      auto it = out.find(h1 + h2);
      if (it == out.end())
        out[h1 + h2] = w;
      else
        it->second += w;
    }
  hl_trim(out);
  return out;
}

HLaurent hl_flip(const HLaurent& x) {
  HLaurent out;
  for (const auto& [h, v] : x) out[h] = (h % 2 == 0) ? v : -v;
  return out;
}

bool hl_is_zero(const HLaurent& x) {
  for (const auto& [h, v] : x)
    if (!v.is_zero()) return false;
  return true;
}

HLaurent hl_class(const CohoClass& v) {
  HLaurent out;
  if (!v.is_zero()) out[0] = v;
  return out;
}

HLaurent inv_linear(const CohoRing& R, const CohoClass& u, long c) {
  if (c == 0) fail_invariant("ZeroDivisor: linear factor with zero hbar coefficient");
  if (!u.c.empty() && !u.c[0].is_zero())
    fail_invariant("inv_linear needs a class with zero scalar part");
  HLaurent out;
  CohoClass upow = R.unit();
  Rat cpow(1, c);  // (1/c)^{k+1}
  for (int k = 0; k <= R.top; ++k) {
    CohoClass term = upow;
    term *= LPoly((k % 2 == 0) ? cpow : -cpow);
    if (!term.is_zero()) out[-k - 1] = term;
    upow = R.mul(upow, u);
    if (upow.is_zero()) break;
    cpow /= c;
  }
  return out;
}

void acc_in(HScal& a, const HScal& b) { hs_addin(a, b); }

void axpy(HScal& a, const LPoly& s, const HScal& b) {
  if (s.is_zero()) return;
  for (const auto& [h, c] : b) {
    a[h] += s * c;
    if (a[h].is_zero()) a.erase(h);
  }
}

void acc_in(CohoClass& a, const CohoClass& b) {
  if (a.c.empty())
    a = b;
  else
    a += b;
}

void axpy(CohoClass& a, const LPoly& s, const CohoClass& b) {
  if (a.c.empty()) a = CohoClass(static_cast<int>(b.c.size()));
  for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += s * b.c[i];
}

void acc_in(HLaurent& a, const HLaurent& b) { hl_addin(a, b); }

void axpy(HLaurent& a, const LPoly& s, const HLaurent& b) {
  if (s.is_zero()) return;
  for (const auto& [h, v] : b) {
    CohoClass w = v;
    w *= s;
    auto it = a.find(h);
    if (it == a.end())
      a[h] = w;
    else {
      it->second += w;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

SerL ser_mul(const SerL& a, const SerL& b) {
  SerL out(a.box);
  IVec d(a.box.size());
  for (const auto& [d1, c1] : a.coef)
    for (const auto& [d2, c2] : b.coef) {
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = d1[t] + d2[t];
      if (out.in_box(d)) out.add(d, c1 * c2);
    }
  return out;
}

SerL ser_one(const IVec& box) {
  SerL s(box);
  s.coef[IVec(box.size(), 0)] = LPoly(1);
  return s;
}

SerL ser_mono(const IVec& box, const IVec& d, const LPoly& c) {
  SerL s(box);
  s.add(d, c);
  return s;
}

SerL ser_exp(const SerL& x) {
  const LPoly* c0 = x.find(IVec(x.box.size(), 0));
  if (c0 && !c0->is_zero()) fail_invariant("ser_exp needs zero constant term");
  long total = 0;
  for (long c : x.box) total += c;
  SerL out = ser_one(x.box);
  SerL pw = ser_one(x.box);
  Rat fact(1);
  for (long k = 1; k <= total; ++k) {
    pw = ser_mul(pw, x);
    if (pw.is_zero()) break;
    fact /= k;
    out = ser_add(out, ser_scale(LPoly(fact), pw));
  }
  return out;
}

SerL log_integrate(const std::vector<SerL>& g) {
  const int r = static_cast<int>(g.size());
  if (r == 0) fail_invariant("log_integrate with no components");
  const IVec& box = g[0].box;
  const IVec zero(box.size(), 0);
  for (int a = 0; a < r; ++a) {
    const LPoly* c0 = g[a].find(zero);
    if (c0 && !c0->is_zero())
      fail_invariant("Inconsistent: q^a d_a f has no constant term, component " +
                     std::to_string(a + 1));
  }
  SerL f(box);
  std::map<IVec, char, GradedLexCmp> support;
  for (int a = 0; a < r; ++a)
    for (const auto& [d, c] : g[a].coef) support[d] = 1;
  for (const auto& [d, unused] : support) {
    (void)unused;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        const LPoly* ga = g[a].find(d);
        const LPoly* gb = g[b].find(d);
        LPoly lhs = ga ? Rat(d[b]) * (*ga) : LPoly();
        LPoly rhs = gb ? Rat(d[a]) * (*gb) : LPoly();
        if (!(lhs == rhs))
          fail_invariant("Inconsistent: cross-derivatives disagree at a monomial, components " +
                         std::to_string(a + 1) + "," + std::to_string(b + 1));
      }
    for (int a = 0; a < r; ++a)
      if (d[a] != 0) {
        const LPoly* ga = g[a].find(d);
        if (ga) f.add(d, ga->div(Rat(d[a])));
        break;
      }
  }
  return f;
}

std::vector<IVec> box_points(const IVec& box) {
  std::vector<IVec> out;
  IVec d(box.size(), 0);
  for (;;) {
    out.push_back(d);
    std::size_t a = 0;
    while (a < box.size()) {
      if (d[a] < box[a]) {
        d[a]++;
        break;
      }
      d[a] = 0;
      ++a;
    }
    if (a == box.size()) break;
  }
  std::sort(out.begin(), out.end(), GradedLexCmp{});
  return out;
}

std::vector<SerL> reverse_coordinates(const std::vector<SerL>& delta) {
  const int r = static_cast<int>(delta.size());
  if (r == 0) return {};
  const IVec& box = delta[0].box;
  const IVec zero(box.size(), 0);
  for (const auto& d : delta) {
    const LPoly* c0 = d.find(zero);
    if (c0 && !c0->is_zero())
      fail_invariant("coordinate shift with nonzero constant term");
  }
  long total = 0;
  for (long c : box) total += c;
  std::vector<SerL> hat(r, SerL(box));
  for (long round = 0; round <= total; ++round) {
    std::vector<SerL> next(r, SerL(box));
    bool stable = true;
    for (int a = 0; a < r; ++a) {
      next[a] = ser_neg(substitute(delta[a], hat));
      if (!(next[a] == hat[a])) stable = false;
    }
    hat = std::move(next);
    if (stable) break;
  }
  return hat;
}

}  // namespace qdm
