#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdm/pipeline.hpp"

namespace qdm {

/* Raw fixture contents; validation happens in make_superspace so that the
 * validate command can report every check, not just the first failure. */
struct ToricInput {
  IMat rays;
  std::vector<std::vector<int>> cones;
  IMat m;
  IMat l;
  IVec cutoff;           // empty when the file does not set one
  int lambda_mode = -1;  // -1 unset, otherwise LambdaMode value
};

ToricInput parse_toric_text(const std::string& text);
ToricInput parse_toric_file(const std::string& path);

/* ---- canonical text rendering ----
 * Terms are ordered degree-lex in q, then by ascending hbar power.  A term
 * reads  [rational*][lam-part*]q-part[*h-part]  with coefficient polynomials
 * in lam parenthesized, e.g.  "-2*q1*q2 + (1 - lam)*q2^2*h^-1".  Zero
 * renders as "0".  The format round-trips through parse_series. */
std::string render_rat(const Rat& x);
std::string render_lpoly(const LPoly& p);
std::string render_ivec(const IVec& v);  // "(2,0)"
std::string render_series(const SerS& s);
std::string render_series(const SerL& s);
std::string render_class(const CohoRing& ring, const CohoClass& x);

/* Entry (i,j) (0-based) of a matrix series / component i of a vector series
 * as a plain scalar series. */
SerS entry_series(const SerM& m, int i, int j);
SerS component_series(const SerV& v, int i);

/* Inverse of render_series over expressions in q1..qr, h, lam. */
SerS parse_series(const std::string& text, const IVec& box, int r);

/* Linear operator words of the difference-equation module: each factor
 * renders like "(2*P2 - h - lam)", an empty word as "1". */
std::string render_linfactor(const LinFactor& f);
std::string render_word(const std::vector<LinFactor>& w);

/* name[i][j] = <entry>  for the full grid, 1-based. */
void emit_matrix(std::ostream& os, const std::string& name, const SerM& m);

/* Aligned grid of rendered entries for human consumption. */
void emit_matrix_table(std::ostream& os, const std::string& name, const SerM& m);

}  // namespace qdm
