#include "fatpoints/grid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "fatpoints/certifier.hpp"
#include "fatpoints/conjecture.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/verify.hpp"

namespace fatpoints {

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::theorem_certified: return "theorem_certified";
    case CellStatus::algorithm_certified: return "algorithm_certified";
    case CellStatus::oracle_confirmed: return "oracle_confirmed";
    case CellStatus::oracle_mismatch: return "oracle_mismatch";
    case CellStatus::out_of_range: return "out_of_range";
  }
  return "unknown";
}

GridCell classify_cell(std::int64_t n, std::int64_t m, std::uint64_t seed, bool with_oracle,
                       std::uint32_t p) {
  const auto root = exact_sqrt(n);
  if (!root || n < 10) throw ParameterError("grid cells need n = s^2 >= 10, got n = " + std::to_string(n));
  const auto s = *root;

  GridCell cell{n, m, CellStatus::out_of_range, std::nullopt, std::nullopt};
  const auto conj_alpha = conjectured_alpha(n, m);
  const auto theorem = mainthm_parameters(n, m);
  if (theorem.applicable) {
    cell.status = CellStatus::theorem_certified;
    cell.predicted_alpha = theorem.predicted_alpha;
  } else if (best_certified_t(n, m, s - 1, s * (s - 1)) + 1 == conj_alpha) {
    cell.status = CellStatus::algorithm_certified;
    cell.predicted_alpha = conj_alpha;
  }

  if (with_oracle) {
    const auto expected = cell.predicted_alpha.value_or(conj_alpha);
    cell.predicted_alpha = expected;
    cell.oracle_alpha = alpha_oracle_with_reseeds(n, m, p, derive_seed(seed, n, m, 0), expected);
    if (*cell.oracle_alpha != expected) {
      cell.status = CellStatus::oracle_mismatch;
    } else if (cell.status == CellStatus::out_of_range) {
      cell.status = CellStatus::oracle_confirmed;
    }
  }
  return cell;
}

std::vector<GridCell> build_grid(const GridOptions& options) {
  if (options.s_min <= options.s_max && (options.s_min < 4 || options.s_max > 7)) {
    throw ParameterError("grid s range must lie within [4, 7]");
  }
  if (options.m_max < 0 || options.m_max > 20) throw ParameterError("m_max must lie within [0, 20]");

  std::vector<GridCell> cells;
  for (auto s = options.s_min; s <= options.s_max; ++s) {
    for (std::int64_t m = 1; m <= options.m_max; ++m) {
      cells.push_back(GridCell{s * s, m, CellStatus::out_of_range, std::nullopt, std::nullopt});
    }
  }

  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto& cell = cells[static_cast<std::size_t>(i)];
    cell = classify_cell(cell.n, cell.m, options.seed, options.with_oracle, options.p);
  }
  return cells;
}

namespace {

std::string optional_field(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string{};
}

constexpr std::array<std::pair<CellStatus, const char*>, 5> kPalette{{
    {CellStatus::theorem_certified, "#1b9e77"},
    {CellStatus::algorithm_certified, "#7570b3"},
    {CellStatus::oracle_confirmed, "#66a61e"},
    {CellStatus::oracle_mismatch, "#d95f02"},
    {CellStatus::out_of_range, "#d9d9d9"},
}};

const char* color_of(CellStatus status) {
  for (const auto& [s, c] : kPalette) {
    if (s == status) return c;
  }
  return "#000000";
}

}  // namespace

std::string grid_csv(const std::vector<GridCell>& cells) {
  auto sorted = cells;
  std::sort(sorted.begin(), sorted.end(),
            [](const GridCell& a, const GridCell& b) { return std::pair{a.n, a.m} < std::pair{b.n, b.m}; });
  std::ostringstream out;
  out << "n,m,status,predicted_alpha,oracle_alpha\n";
  for (const auto& c : sorted) {
    out << c.n << ',' << c.m << ',' << to_string(c.status) << ',' << optional_field(c.predicted_alpha) << ','
        << optional_field(c.oracle_alpha) << '\n';
  }
  return out.str();
}

std::string grid_svg(const std::vector<GridCell>& cells) {
  constexpr int kCell = 28;
  constexpr int kLeft = 60;
  constexpr int kTop = 40;

  std::map<std::int64_t, int> row_of;
  std::int64_t m_max = 0;
  for (const auto& c : cells) {
    row_of.emplace(c.n, 0);
    m_max = std::max(m_max, c.m);
  }
  int r = 0;
  for (auto& [n, idx] : row_of) idx = r++;

  const int grid_w = static_cast<int>(m_max) * kCell;
  const int grid_h = static_cast<int>(row_of.size()) * kCell;
  const int width = kLeft + std::max(grid_w, 200) + 220;
  const int height = kTop + std::max(grid_h, static_cast<int>(kPalette.size()) * 22) + 40;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<title>Uniform fat points: coverage by n and m</title>\n";
  out << "<text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">rows: n, columns: m</text>\n";
  for (const auto& [n, idx] : row_of) {
    out << "<text x=\"4\" y=\"" << kTop + idx * kCell + kCell * 2 / 3 << "\" font-size=\"12\">n=" << n
        << "</text>\n";
  }
  for (std::int64_t m = 1; m <= m_max; ++m) {
    out << "<text x=\"" << kLeft + (m - 1) * kCell + 4 << "\" y=\"" << kTop - 6 << "\" font-size=\"11\">" << m
        << "</text>\n";
  }
  for (const auto& c : cells) {
    const auto x = kLeft + (c.m - 1) * kCell;
    const auto y = kTop + row_of.at(c.n) * kCell;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell - 2 << "\" height=\"" << kCell - 2
        << "\" fill=\"" << color_of(c.status) << "\"><title>n=" << c.n << " m=" << c.m << " "
        << to_string(c.status);
    if (c.predicted_alpha) out << " alpha=" << *c.predicted_alpha;
    out << "</title></rect>\n";
  }
  const int legend_x = kLeft + std::max(grid_w, 200) + 20;
  int legend_y = kTop;
  for (const auto& [status, color] : kPalette) {
    out << "<rect x=\"" << legend_x << "\" y=\"" << legend_y << "\" width=\"14\" height=\"14\" fill=\"" << color
        << "\"/>\n";
    out << "<text x=\"" << legend_x + 20 << "\" y=\"" << legend_y + 12 << "\" font-size=\"12\">"
        << to_string(status) << "</text>\n";
    legend_y += 22;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fatpoints
