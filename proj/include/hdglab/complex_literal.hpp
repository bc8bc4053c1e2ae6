#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hdglab/types.hpp"

namespace hdglab {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (exponents allowed, e.g.
/// "1e-3-2.5e2i"). Returns nullopt on anything else, including non-finite
/// parts and surrounding whitespace.
std::optional<Complex> parse_complex(std::string_view text);

/// Round-trip representation, 17 significant digits.
std::string format_real(double x);

} // namespace hdglab
