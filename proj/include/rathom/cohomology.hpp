#pragma once

#include <cstdint>

#include "rathom/exact_rank.hpp"
#include "rathom/graded_dims.hpp"
#include "rathom/simplicial_complex.hpp"

namespace rathom {

/// delta_k : C^k -> C^{k+1}.  Rows index (k+1)-simplices, columns index
/// k-simplices, both in the complex's lexicographic face order.
struct CoboundaryMatrix {
  int degree = 0;
  SignMatrix entries;
};

/// Entry (sigma, tau) is (-1)^i when tau is sigma with its i-th vertex
/// removed.  For k >= dim(X) the result has zero rows.
CoboundaryMatrix coboundary(const SimplicialComplex& x, int k);

std::size_t coboundary_rank(const SimplicialComplex& x, int k,
                            RankKernel kernel = RankKernel::automatic);

/// Rational cohomology ranks, b_k = #k-simplices - rank delta_k - rank delta_{k-1},
/// each multiplied by coeff_dim (coefficients in Q^coeff_dim).
GradedDims betti(const SimplicialComplex& x, Rank coeff_dim = 1,
                 RankKernel kernel = RankKernel::automatic);

/// betti with one fewer class in degree 0.
GradedDims reduced_betti(const SimplicialComplex& x);
GradedDims reduce(const GradedDims& betti);

/// Alternating count of simplices.
std::int64_t euler_characteristic(const SimplicialComplex& x);
std::int64_t euler_characteristic(const GradedDims& betti);

}  // namespace rathom
