#include "fatpoints/matrix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fatpoints {

void PrimeMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

std::size_t rank_reference(PrimeMatrix a) {
  const std::uint64_t p = a.modulus();
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, rank);
    const auto inv = inverse(a.at(rank, col));
    for (std::size_t row = rank + 1; row < a.rows(); ++row) {
      const std::uint64_t factor = a.at(row, col) * inv % p;
      if (factor == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        a.at(row, c) = static_cast<std::uint32_t>((a.at(row, c) + (p - factor) * a.at(rank, c)) % p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// row[c] -= factor * pivot[c] for c in [from, cols)
inline void axpy_row(const PrimeField& field, std::uint32_t* row, const std::uint32_t* pivot,
                     std::uint32_t factor, std::size_t from, std::size_t cols) {
  const std::uint64_t neg = field.neg(factor);
  for (std::size_t c = from; c < cols; ++c) {
    row[c] = field.reduce(row[c] + neg * pivot[c]);
  }
}

}  // namespace

std::vector<std::size_t> row_reduce(PrimeMatrix& a, bool full) {
  const PrimeField field(a.modulus());
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, rank);

    auto pivot_row = a.row(rank);
    const auto inv = field.inv(pivot_row[col]);
    for (std::size_t c = col; c < cols; ++c) pivot_row[c] = field.mul(pivot_row[c], inv);

    const std::uint32_t* prow = pivot_row.data();
    const auto first = full ? std::size_t{0} : rank + 1;
    const auto count = static_cast<std::ptrdiff_t>(rows - first);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const auto row = first + static_cast<std::size_t>(k);
      if (row == rank) continue;
      auto* dst = a.row(row).data();
      const auto factor = dst[col];
      if (factor != 0) axpy_row(field, dst, prow, factor, col, cols);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t rank(PrimeMatrix a) { return row_reduce(a, false).size(); }

std::vector<std::vector<std::uint32_t>> null_space(PrimeMatrix a) {
  const PrimeField field(a.modulus());
  const auto pivots = row_reduce(a, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(a.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fatpoints
