#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdm/io.hpp"

namespace {

using namespace qdm;

struct Opts {
  std::string input;
  std::string cutoff;
  std::string lambda;
  std::string format = "structured";
};

long to_long(const std::string& t) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    fail_parse("bad integer '" + t + "'");
  }
  if (pos != t.size()) fail_parse("bad integer '" + t + "'");
  return v;
}

/* "3,4" or "a=3,b=4" (also accepts q1=3 style names) */
IVec parse_cutoff(const std::string& s, int r) {
  std::vector<long> positional;
  std::map<int, long> named;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      positional.push_back(to_long(tok));
      continue;
    }
    const std::string name = tok.substr(0, eq);
    int idx = -1;
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z')
      idx = name[0] - 'a';
    else if (name.size() > 1 && name[0] == 'q')
      idx = static_cast<int>(to_long(name.substr(1))) - 1;
    else
      fail_parse("cutoff: bad variable name '" + name + "'");
    if (idx < 0 || idx >= r) fail_parse("cutoff: variable '" + name + "' out of range");
    if (named.count(idx)) fail_parse("cutoff: variable '" + name + "' repeated");
    named[idx] = to_long(tok.substr(eq + 1));
  }
  if (!positional.empty() && !named.empty())
    fail_parse("cutoff: mix of positional and named components");
  IVec box(r, 0);
  if (!named.empty()) {
    if (static_cast<int>(named.size()) != r)
      fail_parse("cutoff: expected " + std::to_string(r) + " components");
    for (const auto& [idx, v] : named) box[idx] = v;
  } else {
    if (static_cast<int>(positional.size()) != r)
      fail_parse("cutoff: expected " + std::to_string(r) + " components");
    for (int a = 0; a < r; ++a) box[a] = positional[a];
  }
  for (long c : box)
    if (c < 0) fail_parse("cutoff components must be >= 0");
  return box;
}

struct Job {
  ToricSuperspace ts;
  IVec box;
  LambdaMode mode = LambdaMode::Zero;
};

Job load_job(const Opts& o) {
  const ToricInput in = parse_toric_file(o.input);
  Job j;
  j.ts = make_superspace(in.rays, in.cones, in.m, in.l);
  if (!o.cutoff.empty()) {
    j.box = parse_cutoff(o.cutoff, j.ts.r);
  } else if (!in.cutoff.empty()) {
    if (static_cast<int>(in.cutoff.size()) != j.ts.r)
      fail_parse("cutoff in input file has wrong arity");
    for (long c : in.cutoff)
      if (c < 0) fail_parse("cutoff components must be >= 0");
    j.box = in.cutoff;
  } else {
    j.box = IVec(j.ts.r, 3);
  }
  if (!o.lambda.empty())
    j.mode = o.lambda == "symbolic" ? LambdaMode::Symbolic : LambdaMode::Zero;
  else if (in.lambda_mode >= 0)
    j.mode = static_cast<LambdaMode>(in.lambda_mode);
  return j;
}

void emit_report(const std::string& prefix, const ValidationReport& rep) {
  for (const auto& it : rep.items) {
    std::cout << prefix << "." << it.name << " = "
              << (it.ok ? "pass" : "fail (" + it.detail + ")") << "\n";
  }
}

int cmd_validate(const Opts& o) {
  const ToricInput in = parse_toric_file(o.input);
  const auto fan = validate_fan(in.rays, in.cones);
  emit_report("fan", fan);
  const auto gale = validate_gale(in.rays, in.m, in.cones);
  emit_report("gale", gale);
  if (!fan.all_ok() || !gale.all_ok()) {
    std::cout << "status = fail\n";
    return 2;
  }
  const ToricSuperspace ts = make_superspace(in.rays, in.cones, in.m, in.l);
  std::cout << "status = ok\n";
  std::cout << "n = " << ts.n << "\n";
  std::cout << "rays = " << ts.N << "\n";
  std::cout << "rank = " << ts.r << "\n";
  std::cout << "bundles = " << ts.ell << "\n";
  std::cout << "deg_q = " << render_ivec(ts.deg_q) << "\n";
  std::cout << "nonfaces =";
  for (const auto& nf : ts.nonfaces) {
    std::cout << " {";
    for (std::size_t i = 0; i < nf.size(); ++i)
      std::cout << (i ? "," : "") << nf[i];
    std::cout << "}";
  }
  std::cout << "\n";
  return 0;
}

int cmd_ring(const Opts& o) {
  const Job j = load_job(o);
  const CohoRing ring = build_ring(j.ts);
  const auto gram = pairing_matrix(ring, j.mode);
  std::cout << "dim = " << ring.dim << "\n";
  std::cout << "top_degree = " << 2 * ring.top << "\n";
  for (int i = 0; i < ring.dim; ++i) {
    std::cout << "T[" << (i + 1) << "] = " << ring.basis_name(i) << "\n";
    std::cout << "T[" << (i + 1) << "].deg = " << ring.degree(i) << "\n";
  }
  CohoClass point = ring.zero();
  point.c[ring.point_idx] = LPoly(ring.point_scale);
  std::cout << "point = " << render_class(ring, point) << "\n";
  std::cout << "euler = " << render_class(ring, euler_class(ring, j.mode)) << "\n";
  for (int i = 0; i < ring.dim; ++i)
    for (int k = 0; k < ring.dim; ++k)
      std::cout << "pairing[" << (i + 1) << "][" << (k + 1)
                << "] = " << render_lpoly(gram[i][k]) << "\n";
  return 0;
}

int cmd_jfun(const Opts& o) {
  const Job j = load_job(o);
  const CohoRing ring = build_ring(j.ts);
  const FloerModel fm(ring, j.mode);
  const SerV jv = fm.j_function_vector(j.box);
  for (int i = 0; i < ring.dim; ++i)
    std::cout << "J[" << (i + 1)
              << "] = " << render_series(component_series(jv, i)) << "\n";
  return 0;
}

int cmd_pf(const Opts& o) {
  const Job j = load_job(o);
  const CohoRing ring = build_ring(j.ts);
  const FloerModel fm(ring, j.mode);
  bool all = true;
  for (int a = 1; a <= j.ts.r; ++a) {
    IVec d(j.ts.r, 0);
    d[a - 1] = 1;
    const PFRelation rel = fm.picard_fuchs(d);
    const bool ok = fm.verify_pf(rel, j.box);
    all = all && ok;
    std::cout << "pf[" << a << "].direction = " << render_ivec(rel.d) << "\n";
    std::cout << "pf[" << a << "].left = " << render_word(rel.left) << "\n";
    std::cout << "pf[" << a << "].right = " << render_word(rel.right) << "\n";
    std::cout << "pf[" << a << "].verified = " << (ok ? "pass" : "fail") << "\n";
  }
  return all ? 0 : 3;
}

void emit(const Opts& o, const std::string& name, const SerM& m) {
  if (o.format == "table")
    emit_matrix_table(std::cout, name, m);
  else
    emit_matrix(std::cout, name, m);
}

int cmd_connection(const Opts& o) {
  const Job j = load_job(o);
  PipelineData pd = run_pipeline(j.ts, j.box, j.mode);
  for (int a = 1; a <= j.ts.r; ++a)
    emit(o, "Omega" + std::to_string(a), pd.conn.omega[a - 1]);
  return 0;
}

int cmd_canonical(const Opts& o) {
  const Job j = load_job(o);
  PipelineData pd = run_pipeline(j.ts, j.box, j.mode);
  emit(o, "SPlus", pd.gauge.plus);
  emit(o, "SMinus", pd.gauge.minus);
  for (int a = 1; a <= j.ts.r; ++a)
    emit(o, "OmegaHat" + std::to_string(a), pd.canon.omega[a - 1]);
  return 0;
}

int cmd_mirror(const Opts& o) {
  const Job j = load_job(o);
  PipelineData pd = run_pipeline(j.ts, j.box, j.mode);
  run_mirror_stage(pd);
  std::cout << "F = " << render_series(pd.mir.F) << "\n";
  std::cout << "f = " << render_series(pd.mir.f) << "\n";
  for (int a = 1; a <= j.ts.r; ++a)
    std::cout << "forward[" << a
              << "] = " << render_series(ser_exp(pd.mir.delta[a - 1])) << "\n";
  for (int a = 1; a <= j.ts.r; ++a)
    std::cout << "inverse[" << a
              << "] = " << render_series(ser_exp(pd.mir.dhat[a - 1])) << "\n";
  return 0;
}

int cmd_qh(const Opts& o) {
  const Job j = load_job(o);
  PipelineData pd = run_pipeline(j.ts, j.box, j.mode);
  run_mirror_stage(pd);
  for (int a = 1; a <= j.ts.r; ++a)
    emit(o, "QOmega" + std::to_string(a), pd.flat.omega[a - 1]);
  for (int a = 1; a <= j.ts.r; ++a)
    for (int jj = 0; jj < pd.ring.dim; ++jj)
      for (int k = 0; k < pd.ring.dim; ++k)
        std::cout << "product[" << a << "][" << (jj + 1) << "][" << (k + 1)
                  << "] = "
                  << render_series(entry_series(pd.flat.omega[a - 1], k, jj))
                  << "\n";
  for (int a = 1; a <= j.ts.r; ++a)
    for (int jj = 0; jj < pd.ring.dim; ++jj)
      for (int k = 0; k < pd.ring.dim; ++k)
        std::cout << "threept[" << a << "][" << (jj + 1) << "][" << (k + 1)
                  << "] = "
                  << render_series(three_point(pd.ring, pd.gram, pd.flat, a, jj, k))
                  << "\n";
  for (int i = 0; i < pd.ring.dim; ++i)
    std::cout << "Jcan[" << (i + 1)
              << "] = " << render_series(component_series(pd.jcan, i)) << "\n";
  return 0;
}

int cmd_pairing(const Opts& o) {
  const Job j = load_job(o);
  const CohoRing ring = build_ring(j.ts);
  const auto gram = pairing_matrix(ring, j.mode);
  const FloerModel fm(ring, j.mode);
  for (int i = 0; i < ring.dim; ++i)
    for (int k = 0; k < ring.dim; ++k)
      std::cout << "gram[" << (i + 1) << "][" << (k + 1)
                << "] = " << render_lpoly(gram[i][k]) << "\n";
  const IVec zero(static_cast<std::size_t>(j.ts.r), 0);
  for (int i = 0; i < ring.dim; ++i)
    for (int k = 0; k < ring.dim; ++k) {
      FloerCycle a{pp_from_exp(j.ts.r, ring.basis[i]), zero};
      FloerCycle b{pp_from_exp(j.ts.r, ring.basis[k]), zero};
      std::cout << "floer[" << (i + 1) << "][" << (k + 1)
                << "] = " << render_series(fm.floer_pairing(a, b, j.box)) << "\n";
    }
  return 0;
}

int cmd_check(const Opts& o) {
  const Job j = load_job(o);
  PipelineData pd = run_pipeline(j.ts, j.box, j.mode);
  const VerifyReport rep = verify_suite(pd);
  for (const auto& [name, ok] : rep.checks)
    std::cout << "check." << name << " = " << (ok ? "pass" : "fail") << "\n";
  std::cout << "check.overall = " << (rep.all_ok ? "pass" : "fail") << "\n";
  return rep.all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum D-module of a toric superspace from fan data"};
  app.require_subcommand(1);

  Opts o;
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"validate", "check fan, presentation, and nef conditions"},
      {"ring", "cohomology ring basis, point class, pairing"},
      {"jfun", "J-function components"},
      {"pf", "difference relations satisfied by the fundamental cycle"},
      {"connection", "connection matrices in the geometric frame"},
      {"canonical", "Birkhoff factors and the hbar-free connection"},
      {"mirror", "flat coordinates, potential, frame factor"},
      {"qh", "quantum multiplication tables in flat coordinates"},
      {"pairing", "Poincare-type pairing and cycle pairings"},
      {"check", "run the full invariant suite"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, desc] : cmds) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("input", o.input, "input .toric file")->required();
    s->add_option("--cutoff", o.cutoff, "per-variable q cutoffs, e.g. 3,4 or a=3,b=4");
    s->add_option("--lambda", o.lambda, "equivariant bundle parameter mode")
        ->check(CLI::IsMember({"zero", "symbolic"}));
    s->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"structured", "table"}));
    subs[name] = s;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (subs["validate"]->parsed()) return cmd_validate(o);
    if (subs["ring"]->parsed()) return cmd_ring(o);
    if (subs["jfun"]->parsed()) return cmd_jfun(o);
    if (subs["pf"]->parsed()) return cmd_pf(o);
    if (subs["connection"]->parsed()) return cmd_connection(o);
    if (subs["canonical"]->parsed()) return cmd_canonical(o);
    if (subs["mirror"]->parsed()) return cmd_mirror(o);
    if (subs["qh"]->parsed()) return cmd_qh(o);
    if (subs["pairing"]->parsed()) return cmd_pairing(o);
    if (subs["check"]->parsed()) return cmd_check(o);
  } catch (const qdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind);
  }
  return 0;
}
