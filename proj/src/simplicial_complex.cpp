#include "rathom/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "rathom/error.hpp"

namespace rathom {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// A simplex on this many vertices already has more than kMaxSimplicesPerDim
// faces in its middle dimension (C(16, 8) = 12870).
constexpr std::size_t kMaxSimplexSize = 15;

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices,
                                                    std::string name) {
  if (simplices.empty()) {
    throw Error(ErrorCode::invalid_argument, "complex has no simplices");
  }
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    Simplex& s = simplices[i];
    if (s.empty()) {
      throw Error(ErrorCode::invalid_argument,
                  "simplex #" + std::to_string(i) + " is empty");
    }
    std::sort(s.begin(), s.end());
    if (s.front() < 0) {
      throw Error(ErrorCode::invalid_argument, "simplex #" + std::to_string(i) +
                                                   " has negative vertex label");
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorCode::invalid_argument,
                  "simplex #" + std::to_string(i) + " " + describe(s) +
                      " has a duplicate vertex");
    }
    if (s.size() > kMaxSimplexSize) {
      throw Error(ErrorCode::capacity,
                  "simplex #" + std::to_string(i) + " has " + std::to_string(s.size()) +
                      " vertices; closure would exceed " +
                      std::to_string(kMaxSimplicesPerDim) + " simplices per dimension");
    }
  }

  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  std::size_t top = 0;
  for (const auto& s : simplices) top = std::max(top, s.size());

  std::vector<std::set<Simplex>> closure(top);
  for (const auto& s : simplices) {
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::size_t{1} << b)) face.push_back(s[b]);
      }
      const std::size_t k = face.size() - 1;
      auto& bucket = closure[k];
      bucket.insert(std::move(face));
      if (bucket.size() > kMaxSimplicesPerDim) {
        throw Error(ErrorCode::capacity, "more than " + std::to_string(kMaxSimplicesPerDim) +
                                             " simplices in dimension " + std::to_string(k));
      }
    }
  }

  SimplicialComplex out;
  out.name_ = std::move(name);
  out.faces_.reserve(top);
  for (auto& bucket : closure) out.faces_.emplace_back(bucket.begin(), bucket.end());
  for (const auto& v : out.faces_[0]) out.vertices_.push_back(v[0]);

  // Maximal iff no single-vertex extension lies in the closure.
  for (const auto& s : simplices) {
    bool is_face = false;
    if (s.size() < top) {
      const auto& cofaces = closure[s.size()];
      for (Vertex v : out.vertices_) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        Simplex t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), v), v);
        if (cofaces.count(t)) {
          is_face = true;
          break;
        }
      }
    }
    if (!is_face) out.maximal_.push_back(s);
  }
  return out;
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  SimplicialComplex out = *this;
  out.name_ = std::move(name);
  return out;
}

std::span<const Simplex> SimplicialComplex::faces(int k) const {
  if (k < 0 || k > dim()) return {};
  return faces_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& bucket : faces_) out.push_back(bucket.size());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> simplex) const {
  auto bucket = faces(static_cast<int>(simplex.size()) - 1);
  auto it = std::lower_bound(bucket.begin(), bucket.end(), simplex,
                             [](const Simplex& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                   b.end());
                             });
  if (it == bucket.end() || !std::equal(it->begin(), it->end(), simplex.begin(), simplex.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - bucket.begin());
}

}  // namespace rathom
