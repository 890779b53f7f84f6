#include "rathom/gauge.hpp"

#include "rathom/cohomology.hpp"
#include "rathom/error.hpp"

namespace rathom {

namespace {

void require_n(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + " requires n >= " +
                                                 std::to_string(minimum) + ", got " +
                                                 std::to_string(n));
  }
}

// sum_{l >= j} rank_G(l) * coh(l - j), for j = 1..max degree of G.
GradedDims thom_sum(const GradedDims& cohomology, const RationalHSpace& g) {
  GradedDims out;
  for (int j = 1; j <= g.max_degree(); ++j) {
    Rank total = 0;
    for (const auto& [l, rank] : g.homotopy_ranks()) {
      if (l >= j) total += rank * cohomology[l - j];
    }
    out.set(j, total);
  }
  return out;
}

}  // namespace

GaugeResult gauge_ranks_from_betti(const GradedDims& betti, const RationalHSpace& g) {
  GaugeResult out;
  out.free_ranks = thom_sum(betti, g);
  out.based_ranks = thom_sum(reduce(betti), g);
  for (const auto& [degree, rank] : out.free_ranks) out.em_decomposition.emplace_back(degree, rank);
  out.habelian = g.finite_dim_cohomology();
  return out;
}

GaugeResult gauge_ranks(const SimplicialComplex& x, const RationalHSpace& g) {
  return gauge_ranks_from_betti(betti(x), g);
}

GradedDims gl_ranks_from_betti(const GradedDims& betti, int n) {
  require_n(n, 1, "gl_ranks");
  GradedDims out;
  const int top = 2 * n - 1;
  for (int h = 1; h <= top; ++h) {
    Rank total = 0;
    for (int j = 1; j <= n; ++j) total += betti[2 * j - 1 - h];
    out.set(h, total);
  }
  return out;
}

GradedDims gl_ranks(const SimplicialComplex& x, int n) { return gl_ranks_from_betti(betti(x), n); }

GradedDims lc_ranks_from_betti(const GradedDims& betti, int n) {
  require_n(n, 1, "lc_ranks");
  GradedDims out;
  for (int k = 1; k <= 2 * n - 1; ++k) out.set(k, betti[2 * n - 1 - k]);
  return out;
}

GradedDims lc_ranks(const SimplicialComplex& x, int n) { return lc_ranks_from_betti(betti(x), n); }

StabilizationReport stabilization_from_betti(const GradedDims& betti, int n) {
  require_n(n, 2, "stabilization");
  const GradedDims previous = gl_ranks_from_betti(betti, n - 1);
  const GradedDims current = gl_ranks_from_betti(betti, n);
  StabilizationReport report;
  report.n = n;
  for (int k = 1; k <= 2 * n - 1; ++k) {
    StabilizationRow row{k, previous[k], current[k], current[k] - previous[k]};
    if (row.cokernel < 0) report.injective = false;
    report.rows.push_back(row);
  }
  return report;
}

StabilizationReport stabilization(const SimplicialComplex& x, int n) {
  return stabilization_from_betti(betti(x), n);
}

bool in_stable_range(int n, int s) { return 2 * n > s + 2; }

int minimal_stable_n(int s) { return (s + 2) / 2 + 1; }

Rank recover_cohomology(const GradedDims& lc, int n, int s) {
  if (s < 0) throw Error(ErrorCode::invalid_argument, "cohomological degree s must be >= 0");
  require_n(n, 1, "recover_cohomology");
  if (!in_stable_range(n, s)) {
    const std::string bound =
        s % 2 == 0 ? std::to_string(s / 2 + 1) : std::to_string(s + 2) + "/2";
    throw Error(ErrorCode::range, "s = " + std::to_string(s) + " requires n > " + bound +
                                      " (smallest valid n is " +
                                      std::to_string(minimal_stable_n(s)) + "), got n = " +
                                      std::to_string(n));
  }
  return lc[2 * n - 1 - s];
}

}  // namespace rathom
