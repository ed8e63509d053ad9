#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logsym/exterior.hpp"

namespace logsym {

/// Where an expression starts in its enclosing file, for error locations.
struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parses a differential form such as "dx/sin(x) ^ dy/sin(y) + 1/2*cos(2z) dz ^ dt".
///
/// Terms combine with + and -; factors with ^, * or juxtaposition (all the wedge product).
/// Atoms are integers, n/m, sin(kθ), cos(kθ), dθ, dθ/sin(θ) and parenthesized
/// expressions. Throws ParseError with the location of the offending token.
LogForm parse_form(std::string_view text, const std::vector<std::string>& names,
                   SourceLocation at = {});

/// Same grammar with dθ read as ∂/∂θ; log covectors are rejected.
Multivector parse_multivector(std::string_view text, const std::vector<std::string>& names,
                              SourceLocation at = {});

/// Valid coordinate names are identifiers other than sin, cos and d-prefixed names of
/// other coordinates.
void check_coordinate_names(const std::vector<std::string>& names);

} // namespace logsym
