#include "qdm/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qdm/errors.hpp"

namespace qdm {

/* ================= fixture parsing ================= */

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long parse_long(const std::string& tok, const std::string& where) {
  const std::string t = strip(tok);
  if (t.empty()) fail_parse(where + ": empty integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    fail_parse(where + ": bad integer '" + t + "'");
  }
  if (pos != t.size()) fail_parse(where + ": bad integer '" + t + "'");
  return v;
}

/* space-separated "(a,b)" or "{a,b}" groups */
std::vector<IVec> parse_tuples(const std::string& v, char open, char close,
                               const std::string& where) {
  std::vector<IVec> out;
  std::size_t i = 0;
  while (i < v.size()) {
    if (std::isspace(static_cast<unsigned char>(v[i]))) {
      ++i;
      continue;
    }
    if (v[i] != open)
      fail_parse(where + ": expected '" + std::string(1, open) + "' at '" +
                 v.substr(i) + "'");
    const std::size_t j = v.find(close, i);
    if (j == std::string::npos)
      fail_parse(where + ": unterminated '" + std::string(1, open) + "'");
    IVec t;
    std::stringstream ss(v.substr(i + 1, j - i - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) t.push_back(parse_long(tok, where));
    if (t.empty()) fail_parse(where + ": empty tuple");
    out.push_back(std::move(t));
    i = j + 1;
  }
  return out;
}

}  // namespace

ToricInput parse_toric_text(const std::string& text) {
  ToricInput in;
  std::stringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    const std::string where = "line " + std::to_string(lineno);
    if (colon == std::string::npos) fail_parse(where + ": expected 'key: value'");
    const std::string key = strip(line.substr(0, colon));
    const std::string val = strip(line.substr(colon + 1));
    if (key == "rays") {
      for (auto& t : parse_tuples(val, '(', ')', where)) in.rays.push_back(t);
    } else if (key == "cones" || key == "max_cones") {
      for (auto& t : parse_tuples(val, '{', '}', where)) {
        std::vector<int> c;
        for (long x : t) c.push_back(static_cast<int>(x));
        in.cones.push_back(std::move(c));
      }
    } else if (key == "m") {
      for (auto& t : parse_tuples(val, '(', ')', where)) in.m.push_back(t);
    } else if (key == "l") {
      for (auto& t : parse_tuples(val, '(', ')', where)) in.l.push_back(t);
    } else if (key == "cutoff") {
      in.cutoff.clear();
      std::stringstream ss(val);
      std::string tok;
      while (std::getline(ss, tok, ',')) in.cutoff.push_back(parse_long(tok, where));
      if (in.cutoff.empty()) fail_parse(where + ": empty cutoff");
    } else if (key == "lambda") {
      if (val == "zero")
        in.lambda_mode = static_cast<int>(LambdaMode::Zero);
      else if (val == "symbolic")
        in.lambda_mode = static_cast<int>(LambdaMode::Symbolic);
      else
        fail_parse(where + ": lambda must be 'zero' or 'symbolic'");
    } else {
      fail_parse(where + ": unknown key '" + key + "'");
    }
  }
  if (in.rays.empty()) fail_parse("input has no rays");
  if (in.cones.empty()) fail_parse("input has no max_cones");
  if (in.m.empty()) fail_parse("input has no Gale matrix m");
  return in;
}

ToricInput parse_toric_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail_parse("cannot read input file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_toric_text(buf.str());
}

/* ================= rendering ================= */

std::string render_rat(const Rat& x) { return x.get_str(); }

namespace {

std::string lam_factor(int k) {
  if (k == 0) return "";
  if (k == 1) return "lam";
  return "lam^" + std::to_string(k);
}

std::string h_factor(int k) {
  if (k == 1) return "h";
  return "h^" + std::to_string(k);
}

std::string q_factor(const IVec& d) {
  std::string s;
  for (std::size_t a = 0; a < d.size(); ++a) {
    if (d[a] == 0) continue;
    if (!s.empty()) s += "*";
    s += "q" + std::to_string(a + 1);
    if (d[a] != 1) s += "^" + std::to_string(d[a]);
  }
  return s;
}

struct RTerm {
  Rat mag;
  bool neg = false;
  std::string sym;
};

std::string join_terms(const std::vector<RTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const RTerm& t = terms[k];
    if (k == 0) {
      if (t.neg) out += "-";
    } else {
      out += t.neg ? " - " : " + ";
    }
    const bool unit = (t.mag == 1);
    if (!unit || t.sym.empty()) out += render_rat(t.mag);
    if (!t.sym.empty()) {
      if (!unit) out += "*";
      out += t.sym;
    }
  }
  return out;
}

std::string glue(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

/* one rendered term per (q^d, h^k) cell */
void cell_term(std::vector<RTerm>& out, const LPoly& c, const std::string& tail) {
  if (c.is_zero()) return;
  int nterms = 0, power = 0;
  for (int k = 0; k <= c.deg(); ++k)
    if (c.coeff(static_cast<std::size_t>(k)) != 0) {
      ++nterms;
      power = k;
    }
  RTerm t;
  if (nterms == 1) {
    const Rat v = c.coeff(static_cast<std::size_t>(power));
    t.mag = abs(v);
    t.neg = v < 0;
    t.sym = glue(lam_factor(power), tail);
  } else {
    t.mag = 1;
    t.sym = glue("(" + render_lpoly(c) + ")", tail);
  }
  out.push_back(std::move(t));
}

}  // namespace

std::string render_lpoly(const LPoly& p) {
  std::vector<RTerm> terms;
  for (int k = 0; k <= p.deg(); ++k) {
    const Rat v = p.coeff(static_cast<std::size_t>(k));
    if (v == 0) continue;
    terms.push_back({abs(v), v < 0, lam_factor(k)});
  }
  return join_terms(terms);
}

std::string render_ivec(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string render_series(const SerS& s) {
  std::vector<RTerm> terms;
  for (const auto& [d, val] : s.coef) {
    const std::string qf = q_factor(d);
    for (const auto& [h, c] : val)
      cell_term(terms, c, h == 0 ? qf : glue(qf, h_factor(h)));
  }
  return join_terms(terms);
}

std::string render_series(const SerL& s) {
  std::vector<RTerm> terms;
  for (const auto& [d, c] : s.coef) cell_term(terms, c, q_factor(d));
  return join_terms(terms);
}

std::string render_class(const CohoRing& ring, const CohoClass& x) {
  std::vector<RTerm> terms;
  for (int i = 0; i < ring.dim; ++i) {
    if (static_cast<std::size_t>(i) >= x.c.size()) break;
    cell_term(terms, x.c[i], i == 0 ? "" : ring.basis_name(i));
  }
  return join_terms(terms);
}

SerS entry_series(const SerM& m, int i, int j) {
  SerS out(m.box);
  for (const auto& [d, mat] : m.coef) {
    const HScal& e = mat.at(i, j);
    if (!hs_is_zero(e)) out.add(d, e);
  }
  return out;
}

SerS component_series(const SerV& v, int i) {
  SerS out(v.box);
  for (const auto& [d, val] : v.coef) {
    HScal cell;
    for (const auto& [h, cls] : val) {
      if (static_cast<std::size_t>(i) < cls.c.size() && !cls.c[i].is_zero())
        cell[h] = cls.c[i];
    }
    if (!cell.empty()) out.add(d, cell);
  }
  return out;
}

void emit_matrix(std::ostream& os, const std::string& name, const SerM& m) {
  int n = 0;
  for (const auto& [d, mat] : m.coef) {
    (void)d;
    n = mat.nsz;
    break;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      os << name << "[" << (i + 1) << "][" << (j + 1)
         << "] = " << render_series(entry_series(m, i, j)) << "\n";
}

void emit_matrix_table(std::ostream& os, const std::string& name, const SerM& m) {
  int n = 0;
  for (const auto& [d, mat] : m.coef) {
    (void)d;
    n = mat.nsz;
    break;
  }
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::vector<std::size_t> width(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cells[i][j] = render_series(entry_series(m, i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  os << name << ":\n";
  for (int i = 0; i < n; ++i) {
    os << "  [ ";
    for (int j = 0; j < n; ++j) {
      if (j) os << " | ";
      os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
    }
    os << " ]\n";
  }
}

std::string render_linfactor(const LinFactor& f) {
  std::vector<RTerm> terms;
  for (std::size_t a = 0; a < f.c.size(); ++a) {
    if (f.c[a] == 0) continue;
    terms.push_back({Rat(std::labs(f.c[a])), f.c[a] < 0,
                     "P" + std::to_string(a + 1)});
  }
  if (f.nu != 0) terms.push_back({Rat(std::labs(f.nu)), f.nu > 0, "h"});
  if (f.lam) terms.push_back({Rat(1), true, "lam"});
  return join_terms(terms);
}

std::string render_word(const std::vector<LinFactor>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += "(" + render_linfactor(w[k]) + ")";
  }
  return out;
}

/* ================= series parsing ================= */

namespace {

/* exponent-keyed terms: (q-exponent, h-exponent) -> Q[lambda] */
using SVal = std::map<std::pair<IVec, int>, LPoly>;

struct SParser {
  const std::string& s;
  std::size_t pos = 0;
  int r;

  SParser(const std::string& text, int rank) : s(text), r(rank) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void err(const std::string& msg) {
    fail_parse("series: " + msg + " at position " + std::to_string(pos));
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == b) err("expected integer");
    long v = std::stol(s.substr(b, pos - b));
    return neg ? -v : v;
  }

  SVal constant(const LPoly& c) {
    SVal v;
    if (!c.is_zero()) v[{IVec(r, 0), 0}] = c;
    return v;
  }

  static SVal mul(const SVal& a, const SVal& b) {
    SVal out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        IVec d = ka.first;
        for (std::size_t t = 0; t < d.size(); ++t) d[t] += kb.first[t];
        LPoly& c = out[{d, ka.second + kb.second}];
        c += ca * cb;
        if (c.is_zero()) out.erase({d, ka.second + kb.second});
      }
    return out;
  }

  static void addin(SVal& a, const SVal& b, bool sub) {
    for (const auto& [k, c] : b) {
      LPoly& x = a[k];
      if (sub)
        x -= c;
      else
        x += c;
      if (x.is_zero()) a.erase(k);
    }
  }

  SVal factor() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end");
    if (eat('(')) {
      SVal v = expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (eat('/')) {
        long den = integer();
        if (den == 0) err("zero denominator");
        Rat v(num, den);
        v.canonicalize();
        return constant(LPoly(v));
      }
      return constant(LPoly(Rat(num)));
    }
    if (s.compare(pos, 3, "lam") == 0) {
      pos += 3;
      long e = eat('^') ? integer() : 1;
      if (e < 0) err("negative lam power");
      LPoly p(1);
      for (long k = 0; k < e; ++k) p *= LPoly::lambda();
      return constant(p);
    }
    if (c == 'h') {
      ++pos;
      long e = eat('^') ? integer() : 1;
      SVal v;
      v[{IVec(r, 0), static_cast<int>(e)}] = LPoly(1);
      return v;
    }
    if (c == 'q') {
      ++pos;
      long a = integer();
      if (a < 1 || a > r) err("bad variable index");
      long e = eat('^') ? integer() : 1;
      if (e < 0) err("negative q power");
      SVal v;
      IVec d(r, 0);
      d[a - 1] = e;
      v[{d, 0}] = LPoly(1);
      return v;
    }
    err("unexpected character");
  }

  SVal term() {
    SVal v = factor();
    while (eat('*')) v = mul(v, factor());
    return v;
  }

  SVal expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    SVal v = term();
    if (neg) {
      SVal z;
      addin(z, v, true);
      v = std::move(z);
    }
    for (;;) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        const bool sub = s[pos] == '-';
        ++pos;
        addin(v, term(), sub);
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace

SerS parse_series(const std::string& text, const IVec& box, int r) {
  SParser p(text, r);
  SVal v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input");
  SerS out(box);
  for (const auto& [k, c] : v) {
    HScal cell;
    cell[k.second] = c;
    out.add(k.first, cell);
  }
  return out;
}

}  // namespace qdm
