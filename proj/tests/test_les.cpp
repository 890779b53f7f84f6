#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rathom/builders.hpp"
#include "rathom/cohomology.hpp"
#include "rathom/corpus.hpp"
#include "rathom/error.hpp"
#include "rathom/gauge.hpp"
#include "rathom/les.hpp"

using namespace rathom;

namespace {

LesRow row(int k, Rank a, Rank b, Rank c, Rank i, Rank g, Rank d) { return {k, a, b, c, i, g, d}; }

const LesRow& at_degree(const LesTable& t, int k) {
  for (const auto& r : t.rows) {
    if (r.degree == k) return r;
  }
  FAIL("no row for degree " << k);
  return t.rows.front();
}

}  // namespace

TEST_CASE("sphere S^2, n = 2") {
  const auto t = build_les(simplex_boundary(3), 2, 3);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0] == row(3, 0, 1, 1, 0, 1, 0));
  CHECK(t.rows[1] == row(2, 0, 0, 0, 0, 0, 0));
  CHECK(t.rows[2] == row(1, 1, 2, 1, 1, 1, 0));
  CHECK(t.exact);
}

TEST_CASE("point recovers U(1) -> U(2) -> S^3") {
  const auto t = build_les(point(), 2);
  REQUIRE(t.rows.size() == 3);
  CHECK(at_degree(t, 3) == row(3, 0, 1, 1, 0, 1, 0));
  CHECK(at_degree(t, 1) == row(1, 1, 1, 0, 1, 0, 0));
  CHECK(t.exact);
}

TEST_CASE("default k_max is 2n - 1 + dim X") {
  CHECK(build_les(torus7(), 3).rows.front().degree == 7);
  CHECK(build_les(point(), 4).rows.front().degree == 7);
  CHECK_THROWS_AS(build_les(point(), 1), Error);
  CHECK_THROWS_AS(build_les(point(), 2, 0), Error);
}

TEST_CASE("verify_exactness examples") {
  CHECK(verify_exactness(build_les(torus7(), 3, 5)).empty());
  CHECK(verify_exactness(build_les(point(), 2, 1)).empty());

  auto t = build_les(torus7(), 3, 5);
  for (auto& r : t.rows) {
    if (r.degree == 2) r.rank_connecting = 1;
  }
  const auto v = verify_exactness(t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ExactnessViolation::Kind::map);
  CHECK(v[0].degree == 2);
  CHECK(v[0].junction == "Lc_n->GL_{n-1}");
}

TEST_CASE("a corrupted dimension is reported against its space") {
  auto t = build_les(simplex_boundary(3), 2, 3);
  t.rows[2].dim_lc += 1;
  const auto v = verify_exactness(t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ExactnessViolation::Kind::space);
  CHECK(v[0].degree == 1);
  CHECK(v[0].junction == "Lc_n");
}

TEST_CASE("rows out of order are a shape violation") {
  auto t = build_les(point(), 2, 3);
  std::swap(t.rows[0], t.rows[1]);
  const auto v = verify_exactness(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == ExactnessViolation::Kind::shape);
}

TEST_CASE("corpus exactness, structure and fault injection") {
  for (const auto& x : builtin_corpus()) {
    CAPTURE(x.name());
    const auto b = betti(x);
    for (int n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const auto t = build_les_from_betti(b, n, 2 * n - 1 + x.dim());
      CHECK(t.exact);
      CHECK(verify_exactness(t).empty());
      for (const auto& r : t.rows) {
        CHECK(r.rank_inclusion == r.dim_gl_previous);
        CHECK(r.rank_connecting == 0);
        CHECK(r.dim_lc == r.dim_gl - r.dim_gl_previous);
      }
      // Alternating sum over the whole (finite, exact) sequence vanishes.
      Rank alternating = 0;
      int sign = 1;
      for (const auto& r : t.rows) {
        for (Rank d : {r.dim_gl_previous, r.dim_gl, r.dim_lc}) {
          alternating += sign * d;
          sign = -sign;
        }
      }
      CHECK(alternating == 0);

      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (int field = 0; field < 6; ++field) {
          for (Rank delta : {-1, 1}) {
            LesTable bad = t;
            Rank* slots[] = {&bad.rows[r].dim_gl_previous, &bad.rows[r].dim_gl,
                             &bad.rows[r].dim_lc,          &bad.rows[r].rank_inclusion,
                             &bad.rows[r].rank_projection, &bad.rows[r].rank_connecting};
            *slots[field] += delta;
            CHECK_FALSE(verify_exactness(bad).empty());
          }
        }
      }
    }
  }
}
