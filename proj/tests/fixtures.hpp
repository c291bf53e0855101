#pragma once

#include <string>

#include "qdm/io.hpp"
#include "qdm/pipeline.hpp"

namespace qdm::testfix {

inline ToricSuperspace p1() {
  return make_superspace({{1}, {-1}}, {{1}, {2}}, {{1}, {1}}, {});
}

inline ToricSuperspace p2() {
  return make_superspace({{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}},
                         {{1}, {1}, {1}}, {});
}

inline ToricSuperspace f1() {
  return make_superspace({{1, 0}, {-1, -1}, {0, 1}, {0, -1}},
                         {{1, 3}, {3, 2}, {2, 4}, {4, 1}},
                         {{1, 0}, {1, 0}, {0, 1}, {-1, 1}}, {});
}

inline ToricSuperspace f1_super() {
  return make_superspace({{1, 0}, {-1, -1}, {0, 1}, {0, -1}},
                         {{1, 3}, {3, 2}, {2, 4}, {4, 1}},
                         {{1, 0}, {1, 0}, {0, 1}, {-1, 1}}, {{0, 2}});
}

/* parse a scalar series in the canonical text format */
inline SerS S(const std::string& text, const IVec& box, int r) {
  return parse_series(text, box, r);
}

/* lift an hbar-free series so it compares against parse_series output */
inline SerS widen(const SerL& x) {
  SerS out(x.box);
  for (const auto& [d, c] : x.coef) out.add(d, hs_const(c));
  return out;
}

}  // namespace qdm::testfix
