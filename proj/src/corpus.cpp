#include "rathom/corpus.hpp"

#include "rathom/builders.hpp"
#include "rathom/error.hpp"

namespace rathom {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "s1", "s2", "s3", "torus7", "rp2_6", "klein8", "point", "two_points", "wedge_s1_s2"};
  return names;
}

SimplicialComplex builtin_complex(std::string_view name) {
  if (name == "s1") return simplex_boundary(2).renamed("s1");
  if (name == "s2") return simplex_boundary(3).renamed("s2");
  if (name == "s3") return suspension(simplex_boundary(3)).renamed("s3");
  if (name == "torus7") return torus7();
  if (name == "rp2_6") return rp2_6();
  if (name == "klein8") return klein8();
  if (name == "point") return point();
  if (name == "two_points") return disjoint_union(point(), point()).renamed("two_points");
  if (name == "wedge_s1_s2") {
    return wedge(simplex_boundary(2), simplex_boundary(3), 0, 0).renamed("wedge_s1_s2");
  }
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::invalid_argument,
              "unknown builtin complex '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<SimplicialComplex> builtin_corpus() {
  std::vector<SimplicialComplex> out;
  for (const auto& name : builtin_names()) out.push_back(builtin_complex(name));
  return out;
}

}  // namespace rathom
