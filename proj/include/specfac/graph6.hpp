#pragma once

#include <string>
#include <string_view>

#include "specfac/graph.hpp"

namespace specfac {

/// graph6 interchange, bit-exact per the de facto standard: 6-bit
/// big-endian chunks offset by 63, upper-triangle column-major edge
/// bits, padding bits zero. Orders 1..64 (63 and 64 use the '~' long
/// form header). An optional ">>graph6<<" prefix is accepted on decode.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace specfac
