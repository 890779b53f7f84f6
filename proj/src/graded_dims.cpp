#include "rathom/graded_dims.hpp"

#include <sstream>

#include "rathom/error.hpp"

namespace rathom {

GradedDims::GradedDims(std::initializer_list<std::pair<const int, Rank>> init) {
  for (const auto& [degree, rank] : init) add(degree, rank);
}

Rank GradedDims::operator[](int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, Rank rank) {
  if (rank < 0) {
    throw Error(ErrorCode::invalid_argument,
                "negative rank " + std::to_string(rank) + " at degree " +
                    std::to_string(degree));
  }
  if (rank == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = rank;
  }
}

void GradedDims::add(int degree, Rank rank) { set(degree, (*this)[degree] + rank); }

std::optional<int> GradedDims::min_degree() const {
  if (ranks_.empty()) return std::nullopt;
  return ranks_.begin()->first;
}

std::optional<int> GradedDims::max_degree() const {
  if (ranks_.empty()) return std::nullopt;
  return ranks_.rbegin()->first;
}

Rank GradedDims::total() const {
  Rank sum = 0;
  for (const auto& [degree, rank] : ranks_) sum += rank;
  return sum;
}

GradedDims GradedDims::shifted(int offset) const {
  GradedDims out;
  for (const auto& [degree, rank] : ranks_) out.ranks_[degree + offset] = rank;
  return out;
}

GradedDims GradedDims::scaled(Rank factor) const {
  GradedDims out;
  for (const auto& [degree, rank] : ranks_) out.set(degree, rank * factor);
  return out;
}

GradedDims operator+(const GradedDims& a, const GradedDims& b) {
  GradedDims out = a;
  for (const auto& [degree, rank] : b) out.add(degree, rank);
  return out;
}

std::string GradedDims::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [degree, rank] : ranks_) {
    if (!first) os << ", ";
    os << degree << ':' << rank;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace rathom
