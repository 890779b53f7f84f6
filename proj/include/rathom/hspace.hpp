#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rathom/graded_dims.hpp"

namespace rathom {

/// Rational H-space model, recorded by its rational homotopy ranks.
///
/// A rational H-space is rationally a product of Eilenberg-Mac Lane spaces
/// K(pi_j (x) Q, j), so the ranks determine it.  When its rational
/// cohomology is finite-dimensional that cohomology is an exterior algebra
/// on odd generators, so every supported degree must be odd.
class RationalHSpace {
 public:
  /// Throws Error(invalid_argument) if a degree is < 1, or if
  /// finite_dim_cohomology is set while some degree is even.
  RationalHSpace(std::string name, GradedDims homotopy_ranks, bool finite_dim_cohomology);

  const std::string& name() const noexcept { return name_; }
  const GradedDims& homotopy_ranks() const noexcept { return ranks_; }
  bool finite_dim_cohomology() const noexcept { return finite_; }

  /// Largest supported degree, 0 for the trivial group.
  int max_degree() const { return ranks_.max_degree().value_or(0); }

 private:
  std::string name_;
  GradedDims ranks_;
  bool finite_;
};

RationalHSpace trivial_group();
/// U(n), equally GL_n(C): one generator in each odd degree 1..2n-1.
RationalHSpace unitary_group(int n);
/// SU(n): degrees 3, 5, ..., 2n-1.
RationalHSpace special_unitary_group(int n);
/// Sp(n): degrees 3, 7, ..., 4n-1.
RationalHSpace symplectic_group(int n);
/// Odd sphere S^m, modelled by K(Q, m).  Even m is rejected.
RationalHSpace odd_sphere(int m);
/// Product of K(Q^rank, degree).  Repeated degrees merge by summing ranks.
RationalHSpace em_product(const std::vector<std::pair<int, Rank>>& factors);
RationalHSpace product(const RationalHSpace& g, const RationalHSpace& h);

/// Poincare polynomial of a graded algebra: coeffs[d] = dim in degree d.
class PoincarePoly {
 public:
  /// Requires coeffs[0] == 1 and every coefficient >= 0; trailing zeros
  /// are trimmed.
  explicit PoincarePoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// prod_i (1 + t^{d_i}), the Poincare polynomial of an exterior algebra.
PoincarePoly exterior_poincare(const std::vector<int>& generator_degrees);

/// Poincare polynomial of H*(G; Q); G must have finite-dimensional cohomology.
PoincarePoly poincare_polynomial(const RationalHSpace& g);

/// Generator degrees d_1 <= ... <= d_r with p = prod (1 + t^{d_i}).
///
/// Peels off (1 + t^d) for the smallest positive degree d with a nonzero
/// coefficient until the constant 1 remains.  Throws
/// Error(factorization) when an even degree is forced or a division is
/// not exact with nonnegative quotient.
std::vector<int> factor_poincare(const PoincarePoly& p);

/// Generator degrees as a group: G with those homotopy ranks.
RationalHSpace hspace_from_poincare(const PoincarePoly& p, std::string name);

struct HnilReport {
  std::string subject;               ///< "G" or the function space label
  std::optional<int> group_hnil;     ///< rational Hnil of G, when known
  std::optional<int> function_space_hnil;
  bool em_decomposition_is_h_equivalence = false;
  std::string explanation;
};

/// Rational homotopical nilpotency where it is forced.  Finite-dimensional
/// rational cohomology makes G rationally homotopy-abelian (Hnil 1), and the
/// function space F(X, G)o (or F.(X, G)o) inherits Hnil of G.  Everything
/// else is reported unknown.
HnilReport hnil_report(const RationalHSpace& g, bool using_full_function_space);

}  // namespace rathom
