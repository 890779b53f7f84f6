#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rathom/simplicial_complex.hpp"

namespace rathom {

/// Parses a complex document:
///
///   {"name": "optional", "maximal_simplices": [[0,1],[1,2],[0,2]]}
///
/// Whitespace-insensitive JSON.  Errors carry ErrorCode::parse and a
/// "line L, column C" prefix pointing at the offending token.
SimplicialComplex parse_complex(std::string_view text);

SimplicialComplex read_complex_file(const std::filesystem::path& path);

/// Inverse of parse_complex (maximal simplices only).
std::string format_complex(const SimplicialComplex& complex);

}  // namespace rathom
