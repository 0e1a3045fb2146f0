#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/oracle.hpp"

namespace fatpoints {

enum class CellStatus {
  theorem_certified,    // covered by the (x, k) window for n = s^2
  algorithm_certified,  // reduction search alone pins alpha to the conjectured value
  oracle_confirmed,
  oracle_mismatch,
  out_of_range,
};

std::string_view to_string(CellStatus status);

struct GridCell {
  std::int64_t n = 0;
  std::int64_t m = 0;
  CellStatus status = CellStatus::out_of_range;
  std::optional<std::int64_t> predicted_alpha;
  std::optional<std::int64_t> oracle_alpha;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct GridOptions {
  std::int64_t s_min = 4;
  std::int64_t s_max = 7;
  std::int64_t m_max = 9;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  std::uint32_t p = kDefaultPrime;
};

// Classifies one (n = s^2, m) cell. Used by build_grid and callable on its own
// to reproduce any single row of the report.
GridCell classify_cell(std::int64_t n, std::int64_t m, std::uint64_t seed, bool with_oracle,
                       std::uint32_t p = kDefaultPrime);

// Cells for s in [s_min, s_max], m in [1, m_max], sorted by (n, m). An empty
// s range yields no cells. Cells are evaluated in parallel.
std::vector<GridCell> build_grid(const GridOptions& options);

// Header `n,m,status,predicted_alpha,oracle_alpha`; missing values are empty.
std::string grid_csv(const std::vector<GridCell>& cells);

// Static SVG: one rect per cell (rows n, columns m) plus a status legend.
std::string grid_svg(const std::vector<GridCell>& cells);

}  // namespace fatpoints
