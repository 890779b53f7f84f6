#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracle.hpp"
#include "rathom/builders.hpp"
#include "rathom/cohomology.hpp"
#include "rathom/corpus.hpp"

using namespace rathom;

namespace {

oracle::Matrix to_rows(const SignMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<long>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

void check_d_squared_zero(const SimplicialComplex& x) {
  for (int k = 0; k + 1 < x.dim(); ++k) {
    const auto first = to_rows(coboundary(x, k).entries);
    const auto second = to_rows(coboundary(x, k + 1).entries);
    for (const auto& row : oracle::multiply(second, first))
      for (long v : row) REQUIRE(v == 0);
  }
}

}  // namespace

TEST_CASE("coboundary examples") {
  const auto triangle = simplex_boundary(2);
  const auto d0 = coboundary(triangle, 0);
  CHECK(d0.entries.rows() == 3);
  CHECK(d0.entries.cols() == 3);
  CHECK(exact_rank(d0.entries) == 2);
  CHECK(oracle::rational_rank(to_rows(d0.entries)) == 2);
  // Edge {0,1}: deleting vertex 0 leaves {1} with sign +1, deleting 1 leaves {0} with -1.
  CHECK(d0.entries(0, 0) == -1);
  CHECK(d0.entries(0, 1) == 1);

  const auto pt = coboundary(point(), 0);
  CHECK(pt.entries.rows() == 0);
  CHECK(pt.entries.cols() == 1);
  CHECK(exact_rank(pt.entries) == 0);

  const auto s2 = simplex_boundary(3);
  const auto d1 = coboundary(s2, 1);
  CHECK(d1.entries.rows() == 4);
  CHECK(d1.entries.cols() == 6);
  check_d_squared_zero(s2);
}

TEST_CASE("each coboundary row has k + 2 nonzero entries") {
  for (const auto& x : builtin_corpus()) {
    for (int k = 0; k < x.dim(); ++k) {
      const auto d = coboundary(x, k);
      for (std::size_t r = 0; r < d.entries.rows(); ++r) {
        int nonzero = 0;
        for (auto v : d.entries.row(r)) nonzero += v != 0;
        REQUIRE(nonzero == k + 2);
      }
    }
  }
}

TEST_CASE("betti examples match the oracle") {
  const auto s2 = simplex_boundary(3);
  CHECK(oracle::betti(s2) == GradedDims{{0, 1}, {2, 1}});
  CHECK(betti(s2) == GradedDims{{0, 1}, {2, 1}});

  CHECK(oracle::betti(torus7()) == GradedDims{{0, 1}, {1, 2}, {2, 1}});
  CHECK(betti(torus7()) == GradedDims{{0, 1}, {1, 2}, {2, 1}});

  CHECK(oracle::betti(rp2_6()) == GradedDims{{0, 1}});
  CHECK(betti(rp2_6()) == GradedDims{{0, 1}});

  CHECK(betti(klein8()) == GradedDims{{0, 1}, {1, 1}});
  CHECK(betti(s2, 3) == GradedDims{{0, 3}, {2, 3}});
}

TEST_CASE("reduced betti") {
  CHECK(reduced_betti(simplex_boundary(3)) == GradedDims{{2, 1}});
  CHECK(reduced_betti(disjoint_union(point(), point())) == GradedDims{{0, 1}});
  CHECK(reduced_betti(point()).empty());
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(simplex_boundary(3)) == 2);
  CHECK(euler_characteristic(torus7()) == 0);
  CHECK(euler_characteristic(point()) == 1);
}

TEST_CASE("builder examples") {
  CHECK(betti(suspension(simplex_boundary(2))) == GradedDims{{0, 1}, {2, 1}});
  CHECK(oracle::betti(suspension(simplex_boundary(2))) == GradedDims{{0, 1}, {2, 1}});
  CHECK(betti(disjoint_union(point(), point())) == GradedDims{{0, 2}});
}

TEST_CASE("corpus: kernels agree with the oracle and d^2 = 0") {
  for (const auto& x : builtin_corpus()) {
    CAPTURE(x.name());
    const auto expected = oracle::betti(x);
    CHECK(betti(x, 1, RankKernel::serial) == expected);
    CHECK(betti(x, 1, RankKernel::parallel) == expected);
    CHECK(euler_characteristic(x) == euler_characteristic(expected));
    check_d_squared_zero(x);
  }
}

TEST_CASE("properties on random complexes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    CAPTURE(trial);
    const auto x = gen::random_complex(rng);
    const auto y = gen::random_complex(rng);
    const auto bx = betti(x);
    const auto by = betti(y);

    CHECK(bx == oracle::betti(x));
    CHECK(euler_characteristic(x) == euler_characteristic(bx));
    check_d_squared_zero(x);

    CHECK(betti(disjoint_union(x, y)) == bx + by);
    const auto w = wedge(x, y, x.vertices().front(), y.vertices().back());
    CHECK(reduced_betti(w) == reduce(bx) + reduce(by));

    CHECK(reduced_betti(suspension(x)) == reduce(bx).shifted(1));
    CHECK(betti(cone(x)) == GradedDims{{0, 1}});
    CHECK(betti(x, 4) == bx.scaled(4));
  }
}
