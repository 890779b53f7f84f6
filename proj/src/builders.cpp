#include "rathom/builders.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rathom/error.hpp"

namespace rathom {

namespace {

std::vector<Simplex> relabeled(const SimplicialComplex& y, const std::map<Vertex, Vertex>& map) {
  std::vector<Simplex> out;
  for (const auto& s : y.maximal_simplices()) {
    Simplex t;
    for (Vertex v : s) t.push_back(map.at(v));
    out.push_back(std::move(t));
  }
  return out;
}

std::map<Vertex, Vertex> fresh_labels(const SimplicialComplex& y, Vertex first) {
  std::map<Vertex, Vertex> map;
  for (Vertex v : y.vertices()) map[v] = first++;
  return map;
}

std::vector<Simplex> triangles(std::initializer_list<std::array<Vertex, 3>> list) {
  std::vector<Simplex> out;
  for (const auto& t : list) out.emplace_back(t.begin(), t.end());
  return out;
}

}  // namespace

SimplicialComplex simplex_boundary(int m) {
  if (m < 1) {
    throw Error(ErrorCode::invalid_argument, "simplex_boundary requires m >= 1");
  }
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= m; ++skip) {
    Simplex s;
    for (int v = 0; v <= m; ++v) {
      if (v != skip) s.push_back(v);
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(std::move(facets),
                                           "boundary of " + std::to_string(m) + "-simplex");
}

SimplicialComplex point() { return SimplicialComplex::from_simplices({{0}}, "point"); }

SimplicialComplex torus7() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7};
    Simplex b{i, (i + 2) % 7, (i + 3) % 7};
    facets.push_back(std::move(a));
    facets.push_back(std::move(b));
  }
  return SimplicialComplex::from_simplices(std::move(facets), "torus7");
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_simplices(
      triangles({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                 {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}}),
      "rp2_6");
}

SimplicialComplex klein8() {
  return SimplicialComplex::from_simplices(
      triangles({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 5}, {1, 3, 6},
                 {1, 4, 5}, {1, 4, 6}, {2, 4, 6}, {2, 3, 5}, {2, 3, 7}, {2, 6, 7},
                 {3, 4, 7}, {3, 5, 6}, {4, 5, 7}, {5, 6, 7}}),
      "klein8");
}

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<Simplex> facets = x.maximal_simplices();
  auto moved = relabeled(y, fresh_labels(y, x.max_label() + 1));
  facets.insert(facets.end(), moved.begin(), moved.end());
  return SimplicialComplex::from_simplices(std::move(facets), x.name() + " + " + y.name());
}

SimplicialComplex wedge(const SimplicialComplex& x, const SimplicialComplex& y, Vertex x_base,
                        Vertex y_base) {
  auto has = [](const SimplicialComplex& c, Vertex v) {
    return std::binary_search(c.vertices().begin(), c.vertices().end(), v);
  };
  if (!has(x, x_base)) {
    throw Error(ErrorCode::invalid_argument,
                "wedge basepoint " + std::to_string(x_base) + " is not a vertex of " + x.name());
  }
  if (!has(y, y_base)) {
    throw Error(ErrorCode::invalid_argument,
                "wedge basepoint " + std::to_string(y_base) + " is not a vertex of " + y.name());
  }
  auto map = fresh_labels(y, x.max_label() + 1);
  map[y_base] = x_base;
  std::vector<Simplex> facets = x.maximal_simplices();
  auto moved = relabeled(y, map);
  facets.insert(facets.end(), moved.begin(), moved.end());
  return SimplicialComplex::from_simplices(std::move(facets), x.name() + " v " + y.name());
}

SimplicialComplex cone(const SimplicialComplex& x) {
  const Vertex apex = x.max_label() + 1;
  std::vector<Simplex> facets;
  for (Simplex s : x.maximal_simplices()) {
    s.push_back(apex);
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(std::move(facets), "cone(" + x.name() + ")");
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  const Vertex north = x.max_label() + 1;
  const Vertex south = x.max_label() + 2;
  std::vector<Simplex> facets;
  for (const Simplex& s : x.maximal_simplices()) {
    for (Vertex pole : {north, south}) {
      Simplex t = s;
      t.push_back(pole);
      facets.push_back(std::move(t));
    }
  }
  return SimplicialComplex::from_simplices(std::move(facets), "suspension(" + x.name() + ")");
}

}  // namespace rathom
