#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "widealloc/allocation.hpp"
#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"
#include "widealloc/outline.hpp"
#include "widealloc/wideness.hpp"

namespace widealloc {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json parse_json_payload(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline long long json_int(const ordered_json& v, const char* what) {
  require(v.is_number_integer(), std::string(what) + " must be an integer");
  return v.get<long long>();
}

}  // namespace detail

// --- Young diagrams ---------------------------------------------------------

// Text form: whitespace-separated row lengths, e.g. "5 4 3 3".
inline YoungDiagram parse_diagram_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> rows;
  long long v = 0;
  while (in >> v) rows.push_back(v);
  detail::require(in.eof(), "diagram text contains a non-integer token");
  detail::require(!rows.empty(), "diagram text is empty");
  return YoungDiagram::from_row_lengths(rows);
}

inline YoungDiagram parse_diagram_json(const ordered_json& j) {
  detail::require(j.is_object(), "diagram JSON must be an object");
  const bool has_rows = j.contains("rows");
  const bool has_blocks = j.contains("blocks");
  detail::require(has_rows != has_blocks,
                  "diagram JSON needs exactly one of \"rows\" or \"blocks\"");
  if (has_rows) {
    const ordered_json& arr = j.at("rows");
    detail::require(arr.is_array() && !arr.empty(),
                    "\"rows\" must be a non-empty array");
    std::vector<long long> rows;
    rows.reserve(arr.size());
    for (const ordered_json& v : arr)
      rows.push_back(detail::json_int(v, "row length"));
    return YoungDiagram::from_row_lengths(rows);
  }
  const ordered_json& arr = j.at("blocks");
  detail::require(arr.is_array() && !arr.empty(),
                  "\"blocks\" must be a non-empty array");
  std::vector<Block> blocks;
  blocks.reserve(arr.size());
  for (const ordered_json& pair : arr) {
    detail::require(pair.is_array() && pair.size() == 2,
                    "each block must be a [length, count] pair");
    blocks.push_back(Block{detail::json_int(pair[0], "block length"),
                           detail::json_int(pair[1], "block count")});
  }
  return YoungDiagram::from_blocks(blocks);
}

// Accepts either the JSON object form or the plain text form.
inline YoungDiagram parse_diagram(const std::string& payload) {
  for (char ch : payload) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_diagram_json(detail::parse_json_payload(payload));
    break;
  }
  return parse_diagram_text(payload);
}

inline ordered_json diagram_to_json(const YoungDiagram& y) {
  ordered_json j;
  j["rows"] = y.row_lengths();
  return j;
}

// --- Allocations -------------------------------------------------------------

inline Allocation parse_allocation_json(const ordered_json& j) {
  detail::require(j.is_object(), "allocation JSON must be an object");
  detail::require(j.contains("p"), "allocation JSON is missing \"p\"");
  const long long p = detail::json_int(j.at("p"), "\"p\"");
  detail::require(p >= 1 && p <= kMaxAllocationBlocks,
                  "\"p\" is out of range");
  Allocation z(static_cast<int>(p));
  if (!j.contains("z")) return z;
  const ordered_json& table = j.at("z");
  detail::require(table.is_object(), "\"z\" must be an object");
  for (const auto& [key, value] : table.items()) {
    int i = 0, jj = 0, k = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(key);
    in >> i >> c1 >> jj >> c2 >> k;
    detail::require(in && in.eof() && c1 == ',' && c2 == ',',
                    "allocation key \"" + key + "\" is not \"i,j,k\"");
    const long long v = detail::json_int(value, "allocation entry");
    detail::require(v >= 0, "allocation entries must be nonnegative");
    z.set_z(i, jj, k, v);
  }
  return z;
}

// Nonzero entries only, in ascending (i, j, k) order.
inline ordered_json allocation_to_json(const Allocation& z) {
  ordered_json j;
  j["p"] = z.num_blocks();
  ordered_json table = ordered_json::object();
  for (int i = 1; i <= z.num_blocks(); ++i)
    for (int jj = 1; jj <= i; ++jj)
      for (int k = 1; k <= i; ++k)
        if (z.z(i, jj, k) != 0)
          table[std::to_string(i) + "," + std::to_string(jj) + "," +
                std::to_string(k)] = z.z(i, jj, k);
  j["z"] = std::move(table);
  return j;
}

// --- Outline rectangles ------------------------------------------------------

inline OutlineRectangle parse_outline_json(const ordered_json& j) {
  detail::require(j.is_object(), "outline JSON must be an object");
  detail::require(j.contains("m") && j.contains("n") && j.contains("cells"),
                  "outline JSON needs \"m\", \"n\", and \"cells\"");
  const long long m = detail::json_int(j.at("m"), "\"m\"");
  const long long n = detail::json_int(j.at("n"), "\"n\"");
  detail::require(m >= 1, "\"m\" must be positive");
  detail::require(n >= 1, "\"n\" must be positive");
  OutlineRectangle out(static_cast<int>(m), n);
  const ordered_json& cells = j.at("cells");
  detail::require(cells.is_array() && static_cast<long long>(cells.size()) == m,
                  "\"cells\" must be an array of m rows");
  for (int i = 0; i < static_cast<int>(m); ++i) {
    const ordered_json& row = cells[static_cast<std::size_t>(i)];
    detail::require(row.is_array() && static_cast<long long>(row.size()) == m,
                    "each outline row must hold m cells");
    for (int jj = 0; jj < static_cast<int>(m); ++jj) {
      const ordered_json& cell = row[static_cast<std::size_t>(jj)];
      detail::require(cell.is_object(), "each outline cell must be an object");
      for (const auto& [key, value] : cell.items()) {
        long long k = 0;
        std::istringstream in(key);
        in >> k;
        detail::require(in && in.eof() && k >= 1 && k <= m,
                        "outline cell key \"" + key +
                            "\" is not a symbol group in 1..m");
        const long long v = detail::json_int(value, "outline count");
        detail::require(v >= 0, "outline counts must be nonnegative");
        out.set_count(i, jj, static_cast<int>(k) - 1, v);
      }
    }
  }
  return out;
}

// Every symbol-group key is emitted, zeros included.
inline ordered_json outline_to_json(const OutlineRectangle& c) {
  ordered_json j;
  j["m"] = c.groups();
  j["n"] = c.divisor();
  ordered_json cells = ordered_json::array();
  for (int i = 0; i < c.groups(); ++i) {
    ordered_json row = ordered_json::array();
    for (int jj = 0; jj < c.groups(); ++jj) {
      ordered_json cell = ordered_json::object();
      for (int k = 0; k < c.groups(); ++k)
        cell[std::to_string(k + 1)] = c.count(i, jj, k);
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  return j;
}

// --- Latin fillings ----------------------------------------------------------

// The diagram is derived from the row lengths (top-to-bottom, descending).
inline LatinFilling parse_filling_json(const ordered_json& j) {
  detail::require(j.is_object() && j.contains("rows"),
                  "filling JSON needs \"rows\"");
  const ordered_json& arr = j.at("rows");
  detail::require(arr.is_array() && !arr.empty(),
                  "\"rows\" must be a non-empty array");
  LatinFilling f;
  std::vector<long long> lengths;
  lengths.reserve(arr.size());
  for (const ordered_json& row : arr) {
    detail::require(row.is_array() && !row.empty(),
                    "each filling row must be a non-empty array");
    std::vector<int> symbols;
    symbols.reserve(row.size());
    for (const ordered_json& v : row)
      symbols.push_back(static_cast<int>(detail::json_int(v, "symbol")));
    lengths.push_back(static_cast<long long>(symbols.size()));
    f.rows.push_back(std::move(symbols));
  }
  for (std::size_t r = 1; r < lengths.size(); ++r)
    detail::require(lengths[r] <= lengths[r - 1],
                    "filling rows must be ordered longest first");
  f.diagram = YoungDiagram::from_row_lengths(lengths);
  return f;
}

inline ordered_json filling_to_json(const LatinFilling& f) {
  ordered_json j;
  j["rows"] = f.rows;
  return j;
}

// --- Latin squares -----------------------------------------------------------

// Text form: n lines of n space-separated symbols in 1..n.
inline LatinSquare parse_latin_text(const std::string& text) {
  std::vector<std::vector<int>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row_in(line);
    std::vector<int> row;
    long long v = 0;
    while (row_in >> v) row.push_back(static_cast<int>(v));
    detail::require(row_in.eof(),
                    "Latin square line contains a non-integer token");
    if (!row.empty()) lines.push_back(std::move(row));
  }
  detail::require(!lines.empty(), "Latin square text is empty");
  const long long n = static_cast<long long>(lines.size());
  std::vector<int> grid;
  grid.reserve(static_cast<std::size_t>(n * n));
  for (const std::vector<int>& row : lines) {
    detail::require(static_cast<long long>(row.size()) == n,
                    "Latin square rows must all have length n");
    grid.insert(grid.end(), row.begin(), row.end());
  }
  return LatinSquare::from_grid(n, std::move(grid));
}

inline std::string latin_to_text(const LatinSquare& L) {
  std::string out;
  for (long long r = 0; r < L.order(); ++r) {
    for (long long c = 0; c < L.order(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(L.at(r, c));
    }
    out += '\n';
  }
  return out;
}

// --- Reduction partitions ----------------------------------------------------

inline ReductionPartition parse_partition_json(const ordered_json& j) {
  detail::require(j.is_object() && j.contains("rows") && j.contains("cols") &&
                      j.contains("symbols"),
                  "partition JSON needs \"rows\", \"cols\", and \"symbols\"");
  auto read = [](const ordered_json& arr, const char* what) {
    detail::require(arr.is_array() && !arr.empty(),
                    std::string(what) + " must be a non-empty array");
    std::vector<long long> out;
    out.reserve(arr.size());
    for (const ordered_json& v : arr) out.push_back(detail::json_int(v, what));
    return out;
  };
  ReductionPartition part;
  part.rows = read(j.at("rows"), "\"rows\"");
  part.cols = read(j.at("cols"), "\"cols\"");
  part.symbols = read(j.at("symbols"), "\"symbols\"");
  return part;
}

inline ordered_json partition_to_json(const ReductionPartition& part) {
  ordered_json j;
  j["rows"] = part.rows;
  j["cols"] = part.cols;
  j["symbols"] = part.symbols;
  return j;
}

// --- Wideness reports --------------------------------------------------------

inline ordered_json wideness_report_to_json(const std::string& method,
                                            const WidenessReport& report) {
  ordered_json j;
  j["method"] = method;
  j["wide"] = report.wide;
  j["checks"] = report.checks;
  j["skipped"] = {{"implied", report.skipped_implied},
                  {"trivial", report.skipped_trivial}};
  if (report.witness)
    j["witness"] = report.witness->describe();
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace widealloc
