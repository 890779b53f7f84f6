#include "rathom/les.hpp"

#include "rathom/cohomology.hpp"
#include "rathom/error.hpp"
#include "rathom/gauge.hpp"

namespace rathom {

LesTable build_les_from_betti(const GradedDims& betti, int n, int k_max) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "build_les requires n >= 2, got " + std::to_string(n));
  if (k_max < 1) throw Error(ErrorCode::invalid_argument, "build_les requires k_max >= 1");
  const GradedDims previous = gl_ranks_from_betti(betti, n - 1);
  const GradedDims current = gl_ranks_from_betti(betti, n);
  const GradedDims lc = lc_ranks_from_betti(betti, n);

  LesTable table;
  table.n = n;
  for (int k = k_max; k >= 1; --k) {
    LesRow row;
    row.degree = k;
    row.dim_gl_previous = previous[k];
    row.dim_gl = current[k];
    row.dim_lc = lc[k];
    row.rank_inclusion = row.dim_gl_previous;
    row.rank_projection = row.dim_gl - row.rank_inclusion;
    row.rank_connecting = 0;
    table.rows.push_back(row);
  }
  table.exact = verify_exactness(table).empty();
  return table;
}

LesTable build_les(const SimplicialComplex& x, int n, std::optional<int> k_max) {
  return build_les_from_betti(betti(x), n, k_max.value_or(2 * n - 1 + x.dim()));
}

namespace {

// The table flattened into spaces V_0, V_1, ... with maps f_p: V_p -> V_{p+1}.
// Row r contributes spaces 3r (GL_{n-1}), 3r+1 (GL_n), 3r+2 (Lc_n) and maps
// 3r (i), 3r+1 (g), 3r+2 (d, into the next row's GL_{n-1}).
struct Flat {
  std::vector<Rank> dims;
  std::vector<Rank> maps;
  std::vector<int> degrees;
};

Flat flatten(const LesTable& t) {
  Flat f;
  for (const auto& row : t.rows) {
    f.dims.insert(f.dims.end(), {row.dim_gl_previous, row.dim_gl, row.dim_lc});
    f.maps.insert(f.maps.end(), {row.rank_inclusion, row.rank_projection, row.rank_connecting});
    f.degrees.insert(f.degrees.end(), {row.degree, row.degree, row.degree});
  }
  return f;
}

constexpr const char* kSpaceNames[] = {"GL_{n-1}", "GL_n", "Lc_n"};
constexpr const char* kMapNames[] = {"GL_{n-1}->GL_n", "GL_n->Lc_n", "Lc_n->GL_{n-1}"};

}  // namespace

std::vector<ExactnessViolation> verify_exactness(const LesTable& table) {
  std::vector<ExactnessViolation> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const int expected = static_cast<int>(table.rows.size() - r);
    if (table.rows[r].degree != expected) {
      out.push_back({ExactnessViolation::Kind::shape, table.rows[r].degree, "rows",
                     "row " + std::to_string(r) + " has degree " +
                         std::to_string(table.rows[r].degree) + ", expected " +
                         std::to_string(expected)});
    }
  }
  if (!out.empty()) return out;

  const Flat f = flatten(table);
  const std::size_t count = f.dims.size();
  std::vector<bool> failed(count, false);
  std::vector<std::string> details(count);
  for (std::size_t p = 0; p < count; ++p) {
    const Rank incoming = p == 0 ? 0 : f.maps[p - 1];
    // The last map, d_1, lands in pi_0 and is checked only at its source.
    const Rank outgoing = f.maps[p];
    if (incoming + outgoing != f.dims[p] || incoming < 0 || outgoing < 0) {
      failed[p] = true;
      details[p] = "incoming rank " + std::to_string(incoming) + " + outgoing rank " +
                   std::to_string(outgoing) + " != dim " + std::to_string(f.dims[p]);
    }
  }

  std::vector<bool> reported(count, false);
  for (std::size_t p = 0; p + 1 < count; ++p) {
    if (failed[p] && failed[p + 1] && !reported[p] && !reported[p + 1]) {
      reported[p] = reported[p + 1] = true;
      out.push_back({ExactnessViolation::Kind::map, f.degrees[p], kMapNames[p % 3],
                     "rank " + std::to_string(f.maps[p]) + " inconsistent at both ends (" +
                         details[p] + "; " + details[p + 1] + ")"});
    }
  }
  for (std::size_t p = 0; p < count; ++p) {
    if (failed[p] && !reported[p]) {
      out.push_back({ExactnessViolation::Kind::space, f.degrees[p], kSpaceNames[p % 3], details[p]});
    }
  }
  return out;
}

}  // namespace rathom
