#pragma once

#include <string>
#include <string_view>

#include "knotwidth/diagram.hpp"

namespace knotwidth {

// Planar diagram code: tuples X(a,b,c,d) or X[a,b,c,d], whitespace or comma separated.
// Slots are read counterclockwise from the incoming under-strand. Empty text is the unknot.
Diagram parse_pd(std::string_view text);

// Deterministic PD text. Components are oriented from their lowest arc id,
// arcs are numbered along the walk. Throws UnsupportedInput for true vertices
// (the bare unknot encoding emits an empty code).
std::string emit_pd(const Diagram& d);

// Signed Gauss code of a knot: tokens O<i>+ / U<i>- etc., comma or whitespace separated.
// Empty text is the unknot.
Diagram parse_gauss(std::string_view text);

}  // namespace knotwidth
