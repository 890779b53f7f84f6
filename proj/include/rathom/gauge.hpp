#pragma once

#include <utility>
#include <vector>

#include "rathom/graded_dims.hpp"
#include "rathom/hspace.hpp"
#include "rathom/simplicial_complex.hpp"

namespace rathom {

// Rational homotopy of mapping spaces out of a finite complex X, computed
// from its Betti numbers.  Each function comes in two forms: one taking X
// (computes betti(X) once) and one taking the Betti numbers directly, for
// callers that evaluate many formulas over the same complex.  Only degrees
// j >= 1 are reported.

struct GaugeResult {
  /// pi_j(F(X, G)o) (x) Q = sum_{l >= j} H^{l-j}(X; pi_l(G) (x) Q)
  GradedDims free_ranks;
  /// pi_j(F.(X, G)o) (x) Q, same sum with reduced cohomology.
  GradedDims based_ranks;
  /// F(X, G)o ~_Q prod_j K(V_j, j), listed as (j, dim V_j).
  std::vector<std::pair<int, Rank>> em_decomposition;
  /// F(X, G)o is rationally homotopy-abelian (G has finite-dim cohomology).
  bool habelian = false;
};

GaugeResult gauge_ranks(const SimplicialComplex& x, const RationalHSpace& g);
GaugeResult gauge_ranks_from_betti(const GradedDims& betti, const RationalHSpace& g);

/// pi_h(GL_n(C(X))o) (x) Q = sum_{j=1..n} H^{2j-1-h}(X; Q).
GradedDims gl_ranks(const SimplicialComplex& x, int n);
GradedDims gl_ranks_from_betti(const GradedDims& betti, int n);

/// pi_k(Lc_n(C(X))o) (x) Q = H^{2n-1-k}(X; Q), from Lc_n ~ F(X, S^{2n-1})o.
GradedDims lc_ranks(const SimplicialComplex& x, int n);
GradedDims lc_ranks_from_betti(const GradedDims& betti, int n);

struct StabilizationRow {
  int degree = 0;
  Rank dim_previous = 0;  ///< pi_k(GL_{n-1}) (x) Q
  Rank dim_current = 0;   ///< pi_k(GL_n) (x) Q
  Rank cokernel = 0;
};

/// The inclusion GL_{n-1} -> GL_n on rational homotopy.  It is the inclusion
/// of the summands j = 1..n-1 into j = 1..n, hence injective with cokernel
/// H^{2n-1-k}(X; Q) in degree k.
struct StabilizationReport {
  int n = 0;
  std::vector<StabilizationRow> rows;  ///< degrees 1..2n-1, ascending
  bool injective = true;
};

StabilizationReport stabilization(const SimplicialComplex& x, int n);
StabilizationReport stabilization_from_betti(const GradedDims& betti, int n);

/// True iff n > s/2 + 1, the range where pi_{2n-1-s}(Lc_n) recovers H^s.
bool in_stable_range(int n, int s);

/// Smallest n with n > s/2 + 1.
int minimal_stable_n(int s);

/// rank H^s(X; Q) read off from the Lc_n ranks: lc(2n - 1 - s).
/// Throws Error(range) outside the stable range, naming the bound.
Rank recover_cohomology(const GradedDims& lc, int n, int s);

}  // namespace rathom
