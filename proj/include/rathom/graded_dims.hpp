#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace rathom {

using Rank = std::int64_t;

/// Finitely supported map degree -> nonnegative rank.  Zero ranks are never
/// stored, so two values compare equal iff they agree at every degree.
class GradedDims {
 public:
  using Storage = std::map<int, Rank>;

  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, Rank>> init);

  /// Rank at `degree`; 0 outside the support, including negative degrees.
  Rank operator[](int degree) const;

  void set(int degree, Rank rank);
  void add(int degree, Rank rank);

  bool empty() const noexcept { return ranks_.empty(); }
  std::size_t support_size() const noexcept { return ranks_.size(); }
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
  Rank total() const;

  /// result[d + offset] = (*this)[d]
  GradedDims shifted(int offset) const;
  GradedDims scaled(Rank factor) const;

  Storage::const_iterator begin() const { return ranks_.begin(); }
  Storage::const_iterator end() const { return ranks_.end(); }

  friend GradedDims operator+(const GradedDims& a, const GradedDims& b);
  friend bool operator==(const GradedDims& a, const GradedDims& b) = default;

  /// "{0:1, 2:1}"
  std::string to_string() const;

 private:
  Storage ranks_;
};

}  // namespace rathom
