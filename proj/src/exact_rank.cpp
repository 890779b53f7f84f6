#include "rathom/exact_rank.hpp"

#include <atomic>
#include <optional>
#include <utility>

#include <gmpxx.h>
#include <omp.h>

namespace rathom {

namespace {

// One Bareiss update: (pivot * a_ij - a_ic * a_rj) / prev, exact division.
inline bool bareiss_step(std::int64_t pivot, std::int64_t aij, std::int64_t aic, std::int64_t arj,
                         std::int64_t prev, std::int64_t& out) {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  if (__builtin_mul_overflow(pivot, aij, &lhs)) return false;
  if (__builtin_mul_overflow(aic, arj, &rhs)) return false;
  if (__builtin_sub_overflow(lhs, rhs, &lhs)) return false;
  out = lhs / prev;
  return true;
}

inline bool add_checked(std::int64_t x, std::int64_t y, std::int64_t& out) {
  return !__builtin_add_overflow(x, y, &out);
}

inline bool add_checked(const mpz_class& x, const mpz_class& y, mpz_class& out) {
  out = x + y;
  return true;
}

inline bool bareiss_step(const mpz_class& pivot, const mpz_class& aij, const mpz_class& aic,
                         const mpz_class& arj, const mpz_class& prev, mpz_class& out) {
  out = pivot * aij - aic * arj;
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), prev.get_mpz_t());
  return true;
}

template <class T>
bool is_zero(const T& v) {
  return v == 0;
}

template <class T>
std::optional<std::size_t> pivot_row(const DenseMatrix<T>& a, std::size_t from, std::size_t c) {
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (!is_zero(a(i, c))) return i;
  }
  return std::nullopt;
}

template <class T>
void swap_rows(DenseMatrix<T>& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  auto rx = a.row(x);
  auto ry = a.row(y);
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(rx[j], ry[j]);
}

// Textbook fraction-free elimination, kept as the reference the optimized
// kernel is tested against.  nullopt signals int64 overflow.
template <class T>
std::optional<std::size_t> bareiss_rank_reference(DenseMatrix<T> a) {
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    const auto p = pivot_row(a, rank, c);
    if (!p) continue;
    swap_rows(a, rank, *p);
    const T pivot = a(rank, c);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      const T aic = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        if (!bareiss_step(pivot, a(i, j), aic, a(rank, j), prev, a(i, j))) return std::nullopt;
      }
      a(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

// Same elimination with two exact shortcuts:
//  - the pivot row is negated when pivot == -prev.  Its current entries are
//    linear in its original row and no other row depends on it yet, so this
//    is the same as negating that input row, which preserves rank.
//  - once pivot == prev, the update of row i reduces to
//    a_ij -= a_ic * a_rj / pivot, which only touches the pivot row's support
//    and leaves rows with a_ic == 0 untouched.
// Rows below the pivot are independent, so the row loop runs under OpenMP.
template <class T>
std::optional<std::size_t> bareiss_rank_fast(DenseMatrix<T> a, bool threaded) {
  std::size_t rank = 0;
  T prev = 1;
  std::vector<std::size_t> support;
  std::atomic<bool> overflow{false};
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    const auto p = pivot_row(a, rank, c);
    if (!p) continue;
    swap_rows(a, rank, *p);
    if (a(rank, c) == -prev) {
      for (std::size_t j = c; j < a.cols(); ++j) a(rank, j) = -a(rank, j);
    }
    const T pivot = a(rank, c);
    const bool unit_ratio = pivot == prev;
    support.clear();
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (!is_zero(a(rank, j))) support.push_back(j);
    }

    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (threaded)
    for (std::ptrdiff_t ii = first; ii < last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const T aic = a(i, c);
      bool ok = true;
      if (unit_ratio) {
        if (is_zero(aic)) continue;
        for (std::size_t j : support) {
          T delta;
          ok = ok && bareiss_step(T(1), T(0), aic, a(rank, j), pivot, delta);
          if (!ok) break;
          T updated;
          ok = add_checked(a(i, j), delta, updated);
          if (!ok) break;
          a(i, j) = updated;
        }
      } else {
        for (std::size_t j = c + 1; j < a.cols() && ok; ++j) {
          ok = bareiss_step(pivot, a(i, j), aic, a(rank, j), prev, a(i, j));
        }
      }
      if (!ok) overflow.store(true, std::memory_order_relaxed);
      a(i, c) = 0;
    }
    if (overflow.load()) return std::nullopt;
    prev = pivot;
    ++rank;
  }
  return rank;
}

template <class T>
std::optional<std::size_t> run_kernel(DenseMatrix<T> a, RankKernel kernel) {
  switch (kernel) {
    case RankKernel::serial:
      return bareiss_rank_reference(std::move(a));
    case RankKernel::parallel:
      return bareiss_rank_fast(std::move(a), true);
    case RankKernel::automatic:
      break;
  }
  const bool threaded = a.rows() * a.cols() >= kParallelThreshold;
  return bareiss_rank_fast(std::move(a), threaded);
}

template <class Src>
DenseMatrix<mpz_class> to_bigint(const DenseMatrix<Src>& m) {
  DenseMatrix<mpz_class> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = static_cast<long>(m(r, c));
  }
  return out;
}

template <class Src>
std::size_t rank_with_fallback(const DenseMatrix<Src>& m, RankKernel kernel) {
  DenseMatrix<std::int64_t> wide(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) wide(r, c) = m(r, c);
  }
  if (auto rank = run_kernel(std::move(wide), kernel)) return *rank;
  return *run_kernel(to_bigint(m), kernel);
}

}  // namespace

std::size_t exact_rank(const SignMatrix& m, RankKernel kernel) {
  return rank_with_fallback(m, kernel);
}

std::size_t exact_rank(const DenseMatrix<std::int64_t>& m, RankKernel kernel) {
  return rank_with_fallback(m, kernel);
}

namespace detail {
std::size_t exact_rank_bigint(const DenseMatrix<std::int64_t>& m, RankKernel kernel) {
  return *run_kernel(to_bigint(m), kernel);
}
}  // namespace detail

}  // namespace rathom
