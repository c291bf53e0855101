#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdm/floer.hpp"
#include "qdm/mirror.hpp"

namespace qdm {

/* Everything the front end and the invariant suite consume, computed in one
 * pass: ring, S-matrix data, both connections, gauge factors, and (for nef
 * degree vectors) the flat-coordinate artifacts. */
struct PipelineData {
  ToricSuperspace ts;
  LambdaMode mode = LambdaMode::Zero;
  IVec box;

  CohoRing ring;
  std::vector<std::vector<LPoly>> gram;

  SerM sinv;            // columns Xi(T_i Delta)
  SerM s;
  SerV j;               // Xi(Delta)
  ConnectionSet conn;   // Floer frame
  BirkhoffPair gauge;
  ConnectionSet canon;  // hbar-free frame

  bool has_mirror = false;
  MirrorData mir;
  ConnectionSet flat;   // flat coordinates qhat
  SerV jcan;
};

/* validate -> ring -> S^{-1} -> Omega -> Birkhoff -> canonical */
PipelineData run_pipeline(const ToricSuperspace& ts, const IVec& box,
                          LambdaMode mode);

/* mirror -> flat connection -> canonical J; NefViolated when some deg q^a
 * is negative. */
void run_mirror_stage(PipelineData& pd);

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok = true;
  void add(std::string name, bool ok) {
    all_ok = all_ok && ok;
    checks.emplace_back(std::move(name), ok);
  }
};

/* The full invariant battery over one pipeline run; runs the mirror stage
 * if it has not happened yet. */
VerifyReport verify_suite(PipelineData& pd);

}  // namespace qdm
