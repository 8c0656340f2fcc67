#pragma once

#include <string_view>

#include "mgb/graph.hpp"
#include "mgb/ring.hpp"

namespace mgb::test {

inline LaurentPoly P(std::string_view text) { return parse_poly(text); }

inline MarkedGraph G(std::string_view text) { return parse_graph(text); }

}  // namespace mgb::test
