#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rathom/graded_dims.hpp"
#include "rathom/simplicial_complex.hpp"

namespace rathom {

/// One degree of the rationalized sequence
///
///   ... -> pi_k(GL_{n-1}) -i-> pi_k(GL_n) -g-> pi_k(Lc_n) -d-> pi_{k-1}(GL_{n-1}) -> ...
///
/// The fibre of GL_n -> Lc_n deformation retracts onto GL_{n-1}, so it is
/// tabulated as GL_{n-1}.
struct LesRow {
  int degree = 0;
  Rank dim_gl_previous = 0;
  Rank dim_gl = 0;
  Rank dim_lc = 0;
  Rank rank_inclusion = 0;   ///< i: pi_k(GL_{n-1}) -> pi_k(GL_n)
  Rank rank_projection = 0;  ///< g: pi_k(GL_n) -> pi_k(Lc_n)
  Rank rank_connecting = 0;  ///< d: pi_k(Lc_n) -> pi_{k-1}(GL_{n-1})

  friend bool operator==(const LesRow&, const LesRow&) = default;
};

/// Rows run from k_max down to 1; pi_0 is not tabulated.
struct LesTable {
  int n = 0;
  std::vector<LesRow> rows;
  bool exact = false;
};

/// Builds the table from the GL and Lc rank formulas.  Map ranks are set
/// structurally (i injective, g = dim GL_n - rank i, d = 0) and `exact` is
/// then recomputed by verify_exactness.  k_max defaults to 2n - 1 + dim X.
LesTable build_les(const SimplicialComplex& x, int n, std::optional<int> k_max = std::nullopt);
LesTable build_les_from_betti(const GradedDims& betti, int n, int k_max);

struct ExactnessViolation {
  enum class Kind {
    map,    ///< both junctions adjacent to this map fail
    space,  ///< a single junction fails
    shape,  ///< rows are not k_max, k_max - 1, ..., 1
  };
  Kind kind = Kind::space;
  int degree = 0;
  /// For maps: "GL_{n-1}->GL_n", "GL_n->Lc_n", "Lc_n->GL_{n-1}".
  /// For spaces: "GL_{n-1}", "GL_n", "Lc_n".
  std::string junction;
  std::string detail;
};

/// Checks rank(incoming) + rank(outgoing) = dim at every space, treating the
/// map into the top row and the map out of pi_1(Lc_n) as zero.  A failure
/// at both ends of one map is reported once against that map; remaining
/// failures are reported against the space.  Empty iff the table is exact.
std::vector<ExactnessViolation> verify_exactness(const LesTable& table);

}  // namespace rathom
