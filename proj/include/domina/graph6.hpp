#pragma once

#include <string>
#include <string_view>

#include "domina/graph.hpp"

namespace domina {

// graph6 encoding, single-byte size form only (0 <= n <= 62). Data bits are
// the upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// packed six per character, most significant bit first, value + 63.
// The multi-byte size extension is rejected, not mis-parsed.

// Accepts an optional ">>graph6<<" prefix and trailing CR/LF.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

}  // namespace domina
