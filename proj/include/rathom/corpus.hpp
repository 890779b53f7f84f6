#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rathom/simplicial_complex.hpp"

namespace rathom {

/// Names accepted by builtin_complex(), in display order.
const std::vector<std::string>& builtin_names();

/// s1, s2, s3, torus7, rp2_6, klein8, point, two_points, wedge_s1_s2.
/// Throws Error(invalid_argument) for an unknown name.
SimplicialComplex builtin_complex(std::string_view name);

std::vector<SimplicialComplex> builtin_corpus();

}  // namespace rathom
