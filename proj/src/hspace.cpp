#include "rathom/hspace.hpp"

#include <algorithm>

#include "rathom/error.hpp"

namespace rathom {

RationalHSpace::RationalHSpace(std::string name, GradedDims homotopy_ranks,
                               bool finite_dim_cohomology)
    : name_(std::move(name)), ranks_(std::move(homotopy_ranks)), finite_(finite_dim_cohomology) {
  for (const auto& [degree, rank] : ranks_) {
    if (degree < 1) {
      throw Error(ErrorCode::invalid_argument,
                  name_ + ": homotopy degree " + std::to_string(degree) + " is below 1");
    }
    if (finite_ && degree % 2 == 0) {
      throw Error(ErrorCode::invalid_argument,
                  name_ + ": finite-dimensional cohomology forces odd degrees, got " +
                      std::to_string(degree));
    }
  }
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_argument, message);
}

RationalHSpace odd_series(std::string name, int first, int step, int count) {
  GradedDims ranks;
  for (int i = 0; i < count; ++i) ranks.add(first + step * i, 1);
  return RationalHSpace(std::move(name), std::move(ranks), true);
}

}  // namespace

RationalHSpace trivial_group() { return RationalHSpace("trivial", {}, true); }

RationalHSpace unitary_group(int n) {
  require(n >= 1, "U(n) requires n >= 1, got " + std::to_string(n));
  return odd_series("U(" + std::to_string(n) + ")", 1, 2, n);
}

RationalHSpace special_unitary_group(int n) {
  require(n >= 1, "SU(n) requires n >= 1, got " + std::to_string(n));
  return odd_series("SU(" + std::to_string(n) + ")", 3, 2, n - 1);
}

RationalHSpace symplectic_group(int n) {
  require(n >= 1, "Sp(n) requires n >= 1, got " + std::to_string(n));
  return odd_series("Sp(" + std::to_string(n) + ")", 3, 4, n);
}

RationalHSpace odd_sphere(int m) {
  require(m >= 1, "S(m) requires m >= 1, got " + std::to_string(m));
  require(m % 2 == 1, "S(" + std::to_string(m) +
                          "): even spheres have two rational homotopy groups and are not "
                          "rational H-spaces");
  return RationalHSpace("S(" + std::to_string(m) + ")", {{m, 1}}, true);
}

RationalHSpace em_product(const std::vector<std::pair<int, Rank>>& factors) {
  GradedDims ranks;
  std::string name = "K(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto [degree, rank] = factors[i];
    require(degree >= 1, "K(...): degree must be >= 1, got " + std::to_string(degree));
    require(rank >= 1, "K(...): rank must be >= 1, got " + std::to_string(rank));
    ranks.add(degree, rank);
    name += (i ? "," : "") + std::to_string(degree) + ":" + std::to_string(rank);
  }
  if (factors.empty()) return trivial_group();
  const bool all_odd = std::all_of(ranks.begin(), ranks.end(),
                                   [](const auto& entry) { return entry.first % 2 == 1; });
  return RationalHSpace(name + ")", std::move(ranks), all_odd);
}

RationalHSpace product(const RationalHSpace& g, const RationalHSpace& h) {
  return RationalHSpace(g.name() + " x " + h.name(), g.homotopy_ranks() + h.homotopy_ranks(),
                        g.finite_dim_cohomology() && h.finite_dim_cohomology());
}

PoincarePoly::PoincarePoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty() || coeffs_[0] != 1) {
    throw Error(ErrorCode::invalid_argument, "Poincare polynomial must have constant term 1");
  }
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 0; })) {
    throw Error(ErrorCode::invalid_argument, "Poincare polynomial has a negative coefficient");
  }
}

PoincarePoly exterior_poincare(const std::vector<int>& generator_degrees) {
  std::vector<std::int64_t> coeffs{1};
  for (int d : generator_degrees) {
    require(d >= 1, "generator degree must be >= 1");
    std::vector<std::int64_t> next(coeffs.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i];
      next[i + static_cast<std::size_t>(d)] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return PoincarePoly(std::move(coeffs));
}

PoincarePoly poincare_polynomial(const RationalHSpace& g) {
  require(g.finite_dim_cohomology(),
          g.name() + " has infinite-dimensional rational cohomology");
  std::vector<int> degrees;
  for (const auto& [degree, rank] : g.homotopy_ranks()) {
    degrees.insert(degrees.end(), static_cast<std::size_t>(rank), degree);
  }
  return exterior_poincare(degrees);
}

std::vector<int> factor_poincare(const PoincarePoly& p) {
  auto fail = [](const std::string& why) -> std::vector<int> {
    throw Error(ErrorCode::factorization,
                "not the Poincare polynomial of a finite-dimensional rational H-space: " + why);
  };
  std::vector<std::int64_t> q = p.coeffs();
  std::vector<int> degrees;
  while (q.size() > 1) {
    std::size_t d = 1;
    while (q[d] == 0) ++d;
    if (d % 2 == 0) return fail("even generator degree " + std::to_string(d) + " is forced");
    // q = (1 + t^d) * s, solved from the low end.
    const std::size_t top = q.size() - 1;
    if (top < d) return fail("degree too small to divide by 1 + t^" + std::to_string(d));
    std::vector<std::int64_t> s(top - d + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = q[i] - (i >= d ? s[i - d] : 0);
      if (s[i] < 0) {
        return fail("dividing by 1 + t^" + std::to_string(d) + " gives a negative coefficient");
      }
    }
    for (std::size_t i = s.size(); i <= top; ++i) {
      const std::int64_t shifted = (i >= d && i - d < s.size()) ? s[i - d] : 0;
      if (q[i] != shifted) {
        return fail("1 + t^" + std::to_string(d) + " does not divide exactly");
      }
    }
    degrees.push_back(static_cast<int>(d));
    while (s.size() > 1 && s.back() == 0) s.pop_back();
    q = std::move(s);
  }
  return degrees;
}

RationalHSpace hspace_from_poincare(const PoincarePoly& p, std::string name) {
  GradedDims ranks;
  for (int d : factor_poincare(p)) ranks.add(d, 1);
  return RationalHSpace(std::move(name), std::move(ranks), true);
}

HnilReport hnil_report(const RationalHSpace& g, bool using_full_function_space) {
  HnilReport report;
  report.subject = using_full_function_space ? "F(X," + g.name() + ")o"
                                             : "F.(X," + g.name() + ")o";
  if (g.finite_dim_cohomology()) {
    report.group_hnil = 1;
    report.function_space_hnil = 1;
    report.em_decomposition_is_h_equivalence = true;
    report.explanation =
        "finite-dimensional rational cohomology: G is rationally homotopy-abelian, the "
        "function space has the same rational Hnil, and the Eilenberg-Mac Lane "
        "decomposition is a rational H-equivalence";
  } else {
    report.explanation =
        "rational cohomology is infinite-dimensional (even-degree homotopy); Hnil is not "
        "determined by homotopy ranks alone";
  }
  return report;
}

}  // namespace rathom
