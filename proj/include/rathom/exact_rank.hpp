#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rathom {

/// Dense row-major integer matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using SignMatrix = DenseMatrix<std::int8_t>;

enum class RankKernel {
  serial,     ///< textbook Bareiss, single-threaded; the reference
  parallel,   ///< sparse-pivot Bareiss with OpenMP over rows
  automatic,  ///< sparse-pivot Bareiss, threaded from kParallelThreshold entries
};

/// Smaller matrices run the optimized kernel on one thread under
/// RankKernel::automatic.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 18;

/// Exact rank by fraction-free (Bareiss) elimination.  Runs in checked
/// 64-bit arithmetic and restarts with GMP integers if an intermediate
/// value overflows, so the result is exact for every input.
std::size_t exact_rank(const SignMatrix& m, RankKernel kernel = RankKernel::automatic);
std::size_t exact_rank(const DenseMatrix<std::int64_t>& m,
                       RankKernel kernel = RankKernel::automatic);

namespace detail {
// Exposed for tests: force the big-integer path.
std::size_t exact_rank_bigint(const DenseMatrix<std::int64_t>& m, RankKernel kernel);
}  // namespace detail

}  // namespace rathom
