#include "rathom/cohomology.hpp"

#include "rathom/error.hpp"

namespace rathom {

CoboundaryMatrix coboundary(const SimplicialComplex& x, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "coboundary degree must be >= 0");
  const auto sources = x.faces(k);
  const auto targets = x.faces(k + 1);
  CoboundaryMatrix out{k, SignMatrix(targets.size(), sources.size())};
  Simplex face;
  for (std::size_t row = 0; row < targets.size(); ++row) {
    const Simplex& sigma = targets[row];
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      face.assign(sigma.begin(), sigma.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto col = x.index_of(face);
      out.entries(row, *col) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

std::size_t coboundary_rank(const SimplicialComplex& x, int k, RankKernel kernel) {
  if (k < 0 || k >= x.dim()) return 0;
  return exact_rank(coboundary(x, k).entries, kernel);
}

GradedDims betti(const SimplicialComplex& x, Rank coeff_dim, RankKernel kernel) {
  if (coeff_dim < 1) throw Error(ErrorCode::invalid_argument, "coefficient dimension must be >= 1");
  std::vector<std::size_t> ranks;
  for (int k = 0; k < x.dim(); ++k) ranks.push_back(coboundary_rank(x, k, kernel));
  GradedDims out;
  for (int k = 0; k <= x.dim(); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Rank outgoing = k < x.dim() ? static_cast<Rank>(ranks[idx]) : 0;
    const Rank incoming = k > 0 ? static_cast<Rank>(ranks[idx - 1]) : 0;
    out.set(k, (static_cast<Rank>(x.num_faces(k)) - outgoing - incoming) * coeff_dim);
  }
  return out;
}

GradedDims reduce(const GradedDims& b) {
  GradedDims out = b;
  if (b[0] < 1) throw Error(ErrorCode::invalid_argument, "cannot reduce: degree 0 rank is zero");
  out.set(0, b[0] - 1);
  return out;
}

GradedDims reduced_betti(const SimplicialComplex& x) { return reduce(betti(x)); }

std::int64_t euler_characteristic(const SimplicialComplex& x) {
  std::int64_t chi = 0;
  for (int k = 0; k <= x.dim(); ++k) {
    const auto count = static_cast<std::int64_t>(x.num_faces(k));
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

std::int64_t euler_characteristic(const GradedDims& b) {
  std::int64_t chi = 0;
  for (const auto& [degree, rank] : b) chi += (degree % 2 == 0) ? rank : -rank;
  return chi;
}

}  // namespace rathom
