#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rathom {

using Vertex = int;
/// Strictly increasing vertex labels.
using Simplex = std::vector<Vertex>;

/// Largest number of simplices allowed in any single dimension.  Cochain
/// matrices are dense, so anything larger is refused with a capacity error.
inline constexpr std::size_t kMaxSimplicesPerDim = 10'000;

/// Finite abstract simplicial complex presented by its maximal simplices.
///
/// The face closure is computed once at construction and stored per
/// dimension, sorted lexicographically.  Instances are immutable.
class SimplicialComplex {
 public:
  /// Validates and closes the given simplices.  Labels must be nonnegative
  /// and distinct within a simplex; the list must be nonempty.  Non-maximal
  /// entries are accepted and dropped from maximal_simplices().
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices,
                                          std::string name = {});

  const std::string& name() const noexcept { return name_; }
  SimplicialComplex renamed(std::string name) const;

  int dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }

  /// All k-simplices (k + 1 vertices); empty span for k outside [0, dim].
  std::span<const Simplex> faces(int k) const;
  std::size_t num_faces(int k) const { return faces(k).size(); }
  std::vector<std::size_t> f_vector() const;

  /// Position of `simplex` within faces(simplex.size() - 1).
  std::optional<std::size_t> index_of(std::span<const Vertex> simplex) const;

  Vertex max_label() const { return vertices_.back(); }

 private:
  SimplicialComplex() = default;

  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<Simplex>> faces_;
};

}  // namespace rathom
