#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "rathom/builders.hpp"
#include "rathom/cohomology.hpp"
#include "rathom/corpus.hpp"
#include "rathom/error.hpp"
#include "rathom/gauge.hpp"

using namespace rathom;

namespace {

std::vector<RationalHSpace> catalog() {
  std::vector<RationalHSpace> out;
  for (int n = 1; n <= 5; ++n) out.push_back(unitary_group(n));
  for (int m : {1, 3, 5, 7}) out.push_back(odd_sphere(m));
  out.push_back(em_product({{1, 1}, {2, 1}}));
  out.push_back(em_product({{3, 2}}));
  out.push_back(em_product({{2, 1}, {4, 2}, {5, 1}}));
  out.push_back(special_unitary_group(3));
  out.push_back(symplectic_group(2));
  out.push_back(trivial_group());
  return out;
}

// Direct transcription of the V_j sum over an oracle Betti vector.
GradedDims thom_oracle(const GradedDims& cohomology, const RationalHSpace& g) {
  GradedDims out;
  for (int j = 1; j <= g.max_degree(); ++j)
    for (int l = j; l <= g.max_degree(); ++l)
      out.add(j, g.homotopy_ranks()[l] * cohomology[l - j]);
  return out;
}

}  // namespace

TEST_CASE("gauge examples") {
  const auto s2 = gauge_ranks(simplex_boundary(3), unitary_group(2));
  CHECK(s2.free_ranks == GradedDims{{1, 2}, {3, 1}});
  // F.(S^2, G) = Omega^2 G: only pi_3(U(2)) survives, in degree 1.
  CHECK(s2.based_ranks == GradedDims{{1, 1}});
  CHECK(s2.habelian);
  CHECK(s2.em_decomposition == std::vector<std::pair<int, Rank>>{{1, 2}, {3, 1}});

  for (const auto& g : catalog()) {
    const auto pt = gauge_ranks(point(), g);
    CHECK(pt.free_ranks == g.homotopy_ranks());
    CHECK(pt.based_ranks.empty());
  }

  const auto thom = gauge_ranks(torus7(), em_product({{3, 1}}));
  CHECK(thom.free_ranks == GradedDims{{1, 1}, {2, 2}, {3, 1}});
  CHECK_FALSE(gauge_ranks(torus7(), em_product({{2, 1}})).habelian);
}

TEST_CASE("gl examples") {
  CHECK(gl_ranks(simplex_boundary(3), 2) == GradedDims{{1, 2}, {3, 1}});
  CHECK(gl_ranks(point(), 3) == GradedDims{{1, 1}, {3, 1}, {5, 1}});
  CHECK(gl_ranks(torus7(), 2) == GradedDims{{1, 2}, {2, 2}, {3, 1}});
  CHECK_THROWS_AS(gl_ranks(point(), 0), Error);
}

TEST_CASE("lc examples") {
  CHECK(lc_ranks(simplex_boundary(3), 2) == GradedDims{{1, 1}, {3, 1}});
  CHECK(lc_ranks(point(), 2) == GradedDims{{3, 1}});
  CHECK(lc_ranks(torus7(), 3) == GradedDims{{3, 1}, {4, 2}, {5, 1}});
  CHECK_THROWS_AS(lc_ranks(point(), 0), Error);
}

TEST_CASE("stabilization examples") {
  const auto s2 = stabilization(simplex_boundary(3), 2);
  REQUIRE(s2.rows.size() == 3);
  CHECK(s2.injective);
  CHECK(s2.rows[0].dim_previous == 1);
  CHECK(s2.rows[0].dim_current == 2);
  CHECK(s2.rows[0].cokernel == 1);
  CHECK(s2.rows[2].dim_previous == 0);
  CHECK(s2.rows[2].dim_current == 1);
  CHECK(s2.rows[2].cokernel == 1);

  const auto pt = stabilization(point(), 2);
  CHECK(pt.rows[0].dim_previous == 1);
  CHECK(pt.rows[0].dim_current == 1);
  CHECK(pt.rows[0].cokernel == 0);
  CHECK(pt.rows[2].cokernel == 1);

  // U(n-1) -> U(n) is an isomorphism on pi_k for k <= 2n - 3.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& row : stabilization(point(), n).rows) {
      if (row.degree <= 2 * n - 3) CHECK(row.cokernel == 0);
    }
  }
  CHECK_THROWS_AS(stabilization(point(), 1), Error);
}

TEST_CASE("recover examples") {
  CHECK(recover_cohomology(lc_ranks(torus7(), 3), 3, 1) == 2);
  CHECK(recover_cohomology(lc_ranks(simplex_boundary(3), 3), 3, 0) == 1);
  try {
    (void)recover_cohomology(GradedDims{}, 3, 4);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::range);
    CHECK(std::string(e.what()).find("requires n > 3") != std::string::npos);
    CHECK(std::string(e.what()).find("smallest valid n is 4") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(recover_cohomology(GradedDims{}, 1, 1), doctest::Contains("n > 3/2"), Error);
  CHECK_THROWS_AS(recover_cohomology(GradedDims{}, 3, -1), Error);
}

TEST_CASE("stable range boundary") {
  for (int s = 0; s <= 12; ++s) {
    const int n0 = minimal_stable_n(s);
    CHECK(in_stable_range(n0, s));
    CHECK_FALSE(in_stable_range(n0 - 1, s));
    // n > s/2 + 1 over the rationals.
    CHECK(2 * n0 > s + 2);
    CHECK(2 * (n0 - 1) <= s + 2);
  }
}

TEST_CASE("corpus invariants") {
  std::vector<SimplicialComplex> corpus = builtin_corpus();
  corpus.push_back(disjoint_union(torus7(), simplex_boundary(3)));
  corpus.push_back(suspension(rp2_6()));
  for (const auto& x : corpus) {
    CAPTURE(x.name());
    const auto b = oracle::betti(x);
    const auto reduced = reduce(b);

    for (const auto& g : catalog()) {
      CAPTURE(g.name());
      const auto r = gauge_ranks(x, g);
      CHECK(r.free_ranks == thom_oracle(b, g));
      CHECK(r.based_ranks == thom_oracle(reduced, g));
      for (int j = 1; j <= g.max_degree() + 1; ++j) {
        CHECK(r.free_ranks[j] == r.based_ranks[j] + g.homotopy_ranks()[j]);
      }
      for (const auto& h : catalog()) {
        CHECK(gauge_ranks(x, product(g, h)).free_ranks ==
              gauge_ranks(x, g).free_ranks + gauge_ranks(x, h).free_ranks);
      }
    }

    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      const auto gl = gl_ranks(x, n);
      const auto lc = lc_ranks(x, n);
      CHECK(gl == gauge_ranks(x, unitary_group(n)).free_ranks);
      CHECK(lc == gauge_ranks(x, odd_sphere(2 * n - 1)).free_ranks);
      for (int h = 2 * n + x.dim(); h < 2 * n + x.dim() + 5; ++h) CHECK(gl[h] == 0);
      for (int k = 2 * n; k < 2 * n + 5; ++k) CHECK(lc[k] == 0);
      for (int k = -3; k < 2 * n - 1 - x.dim(); ++k) CHECK(lc[k] == 0);
      if (n >= 2) {
        const auto previous = gl_ranks(x, n - 1);
        const auto stab = stabilization(x, n);
        CHECK(stab.injective);
        for (const auto& row : stab.rows) {
          CHECK(row.cokernel == gl[row.degree] - previous[row.degree]);
          CHECK(row.cokernel == lc[row.degree]);
          CHECK(row.cokernel == b[2 * n - 1 - row.degree]);
        }
      }
    }

    for (int s = 0; s <= x.dim(); ++s) {
      for (int n = minimal_stable_n(s); n <= 6; ++n) {
        CHECK(recover_cohomology(lc_ranks(x, n), n, s) == b[s]);
      }
    }
  }
}
