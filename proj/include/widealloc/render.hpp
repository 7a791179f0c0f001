#pragma once

#include <sstream>
#include <string>

#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"

namespace widealloc {

inline constexpr long long kMaxRenderSide = 10000;

namespace detail {

inline void check_render_size(long long rows, long long width) {
  if (rows > kMaxRenderSide || width > kMaxRenderSide)
    throw ScaleLimitError("shape too large to render");
}

}  // namespace detail

// One line per row, '#' per cell, longest row first.
inline std::string render_diagram_ascii(const YoungDiagram& y) {
  detail::check_render_size(y.num_rows(), y.widest());
  std::string out;
  for (long long len : y.row_lengths()) {
    out.append(static_cast<std::size_t>(len), '#');
    out += '\n';
  }
  return out;
}

// Symbols right-aligned in fixed-width columns.
inline std::string render_filling_ascii(const LatinFilling& f) {
  detail::check_render_size(static_cast<long long>(f.rows.size()),
                            f.diagram.widest());
  std::size_t width = 1;
  for (long long w = f.diagram.widest(); w >= 10; w /= 10) ++width;
  std::string out;
  for (const std::vector<int>& row : f.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      std::string cell = std::to_string(row[c]);
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline void svg_open(std::ostringstream& out, long long cols, long long rows,
                     int cell) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << cols * cell + 2 << "\" height=\"" << rows * cell + 2
      << "\" viewBox=\"-1 -1 " << cols * cell + 2 << " " << rows * cell + 2
      << "\">\n";
}

inline void svg_cell(std::ostringstream& out, long long r, long long c,
                     int cell) {
  out << "  <rect x=\"" << c * cell << "\" y=\"" << r * cell << "\" width=\""
      << cell << "\" height=\"" << cell
      << "\" fill=\"#f7f3e8\" stroke=\"#444\" stroke-width=\"1\"/>\n";
}

}  // namespace detail

inline std::string render_diagram_svg(const YoungDiagram& y) {
  detail::check_render_size(y.num_rows(), y.widest());
  constexpr int cell = 22;
  std::ostringstream out;
  detail::svg_open(out, y.widest(), y.num_rows(), cell);
  long long r = 0;
  for (long long len : y.row_lengths()) {
    for (long long c = 0; c < len; ++c) detail::svg_cell(out, r, c, cell);
    ++r;
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_filling_svg(const LatinFilling& f) {
  detail::check_render_size(static_cast<long long>(f.rows.size()),
                            f.diagram.widest());
  constexpr int cell = 26;
  std::ostringstream out;
  detail::svg_open(out, f.diagram.widest(),
                   static_cast<long long>(f.rows.size()), cell);
  for (std::size_t r = 0; r < f.rows.size(); ++r)
    for (std::size_t c = 0; c < f.rows[r].size(); ++c) {
      detail::svg_cell(out, static_cast<long long>(r),
                       static_cast<long long>(c), cell);
      out << "  <text x=\"" << c * cell + cell / 2 << "\" y=\""
          << r * cell + cell / 2
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#222\" "
             "text-anchor=\"middle\" dominant-baseline=\"central\">"
          << f.rows[r][c] << "</text>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace widealloc
