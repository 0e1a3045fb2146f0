#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/prime_field.hpp"

namespace fatpoints {

// Dense row-major matrix over a prime field; entries are kept reduced in [0, p).
class PrimeMatrix {
 public:
  PrimeMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<std::uint32_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;

  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

// Serial Gaussian elimination with plain `%` reductions; the reference the
// parallel kernel is tested against.
std::size_t rank_reference(PrimeMatrix a);

// Row echelon form in place; returns pivot columns in increasing order. With
// `full` the result is reduced row echelon form (pivots 1, zeros above).
// Row updates for each pivot run as an OpenMP parallel loop.
std::vector<std::size_t> row_reduce(PrimeMatrix& a, bool full);

// Rank via row_reduce.
std::size_t rank(PrimeMatrix a);

// Basis of {v : A v = 0}, one vector of length cols() per free column.
std::vector<std::vector<std::uint32_t>> null_space(PrimeMatrix a);

// Number of OpenMP threads the kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace fatpoints
