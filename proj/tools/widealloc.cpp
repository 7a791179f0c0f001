// Command-line front end: wideness checks, allocations, Latin fillings,
// outline-rectangle operations, and the exhaustive cross-check harness.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 invalid input or size gate, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "widealloc/widealloc.hpp"

namespace {

using widealloc::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// "-" reads stdin, an existing file is read whole, anything else is taken as
// an inline payload.
std::string load_payload(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string load_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file)
    throw widealloc::InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw widealloc::InvalidInput("cannot write file: " + out_path);
  out << text;
}

struct CheckWideArgs {
  std::string input;
  std::string method = "fast";
  bool json = false;
};

int run_check_wide(const CheckWideArgs& args) {
  const widealloc::YoungDiagram y =
      widealloc::parse_diagram(load_payload(args.input));
  std::vector<std::pair<std::string, widealloc::WidenessReport>> runs;
  if (args.method == "oracle" || args.method == "all")
    runs.emplace_back("oracle", widealloc::is_wide_oracle(y));
  if (args.method == "tails" || args.method == "all")
    runs.emplace_back("tails", widealloc::is_wide_tails(y));
  if (args.method == "fast" || args.method == "all")
    runs.emplace_back("fast", widealloc::is_wide_fast(y));

  for (const auto& [name, report] : runs)
    widealloc::detail::invariant(report.wide == runs.front().second.wide,
                                 "wideness methods disagree on " + y.to_text());
  const widealloc::WidenessReport& verdict = runs.front().second;

  if (args.json) {
    ordered_json j;
    j["diagram"] = y.to_text();
    j["wide"] = verdict.wide;
    ordered_json methods = ordered_json::array();
    for (const auto& [name, report] : runs)
      methods.push_back(widealloc::wideness_report_to_json(name, report));
    j["methods"] = std::move(methods);
    emit_json(j);
  } else if (verdict.wide) {
    std::cout << "wide\n";
  } else {
    std::cout << "not wide";
    if (verdict.witness) std::cout << ": " << verdict.witness->describe();
    std::cout << "\n";
  }
  return verdict.wide ? kExitTrue : kExitFalse;
}

struct AllocateArgs {
  std::string input;
  bool json = false;
  bool residuals = false;
};

ordered_json residuals_to_json(const widealloc::ResidualTable& t) {
  ordered_json j;
  ordered_json slack = ordered_json::object();
  for (int i = 1; i <= 3; ++i)
    for (int jj = 1; jj <= 3; ++jj)
      for (int k = 1; k <= 3; ++k)
        if (std::max(jj, k) <= i)
          slack[std::to_string(i) + "," + std::to_string(jj) + "," +
                std::to_string(k)] = t.slack(i, jj, k);
  j["slack"] = std::move(slack);
  j["column_block_totals"] = {t.col_block_slack[1], t.col_block_slack[2],
                              t.col_block_slack[3]};
  return j;
}

int run_allocate(const AllocateArgs& args) {
  const widealloc::YoungDiagram y =
      widealloc::parse_diagram(load_payload(args.input));
  const widealloc::Allocation z = widealloc::allocate(y);

  if (args.json) {
    ordered_json j = widealloc::allocation_to_json(z);
    if (args.residuals)
      j["residuals"] = residuals_to_json(widealloc::residuals(y, z));
    emit_json(j);
    return kExitTrue;
  }
  for (int i = 1; i <= z.num_blocks(); ++i)
    for (int jj = 1; jj <= i; ++jj)
      for (int k = 1; k <= i; ++k)
        if (z.z(i, jj, k) != 0)
          std::cout << "z(" << i << "," << jj << "," << k
                    << ") = " << z.z(i, jj, k) << "\n";
  if (args.residuals) {
    const widealloc::ResidualTable t = widealloc::residuals(y, z);
    for (int i = 1; i <= 3; ++i)
      for (int jj = 1; jj <= 3; ++jj)
        for (int k = 1; k <= 3; ++k)
          if (std::max(jj, k) <= i)
            std::cout << "slack(" << i << "," << jj << "," << k
                      << ") = " << t.slack(i, jj, k) << "\n";
    for (int jj = 1; jj <= 3; ++jj)
      std::cout << "column-block total " << jj << " = "
                << t.col_block_slack[static_cast<std::size_t>(jj)] << "\n";
  }
  return kExitTrue;
}

struct FillArgs {
  std::string input;
  std::string method = "pipeline";
  std::string render = "ascii";
  bool json = false;
};

int run_fill(const FillArgs& args) {
  const widealloc::YoungDiagram y =
      widealloc::parse_diagram(load_payload(args.input));
  std::optional<widealloc::LatinFilling> filling;
  if (args.method == "pipeline") {
    try {
      filling = widealloc::fill_via_allocation(y).filling;
    } catch (const widealloc::NotWideError& e) {
      std::cout << "no Latin filling: " << e.what() << "\n";
      return kExitFalse;
    }
  } else {
    const widealloc::ExactFillResult result = widealloc::fill_exact(y);
    if (!result.found()) {
      std::cout << "no Latin filling\n";
      return kExitFalse;
    }
    filling = result.filling;
  }
  if (args.json)
    emit_json(widealloc::filling_to_json(*filling));
  else if (args.render == "svg")
    std::cout << widealloc::render_filling_svg(*filling);
  else
    std::cout << widealloc::render_filling_ascii(*filling);
  return kExitTrue;
}

struct VerifyArgs {
  std::string filling;
  std::string diagram;
  std::string allocation;
  std::string outline;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  bool all_ok = true;
  ordered_json j = ordered_json::object();
  std::optional<widealloc::YoungDiagram> y;
  if (!args.diagram.empty())
    y = widealloc::parse_diagram(load_payload(args.diagram));

  auto report = [&](const char* what, bool ok, const std::string& details) {
    all_ok = all_ok && ok;
    if (args.json)
      j[what] = ok ? ordered_json{{"ok", true}}
                   : ordered_json{{"ok", false}, {"violation", details}};
    else if (ok)
      std::cout << what << ": ok\n";
    else
      std::cout << what << ": " << details << "\n";
  };

  if (!args.filling.empty()) {
    widealloc::detail::require(y.has_value(),
                               "--filling needs --diagram to verify against");
    const widealloc::LatinFilling f = widealloc::parse_filling_json(
        widealloc::detail::parse_json_payload(load_file(args.filling)));
    const widealloc::FillingVerdict v = widealloc::verify_filling(*y, f);
    report("filling", v.ok, v.ok ? "" : v.violation->describe());
  }
  if (!args.allocation.empty()) {
    widealloc::detail::require(y.has_value(),
                               "--allocation needs --diagram to verify against");
    const widealloc::Allocation z = widealloc::parse_allocation_json(
        widealloc::detail::parse_json_payload(load_file(args.allocation)));
    const widealloc::AllocationVerdict v = widealloc::verify_allocation(*y, z);
    report("allocation", v.ok, v.ok ? "" : v.violation->describe());
  }
  if (!args.outline.empty()) {
    const widealloc::OutlineRectangle c = widealloc::parse_outline_json(
        widealloc::detail::parse_json_payload(load_file(args.outline)));
    const widealloc::OutlineVerdict v = widealloc::verify_outline(c);
    report("outline", v.ok, v.ok ? "" : v.violation->describe());
  }
  widealloc::detail::require(
      !args.filling.empty() || !args.allocation.empty() ||
          !args.outline.empty(),
      "verify needs at least one of --filling, --allocation, --outline");
  if (args.json) emit_json(j);
  return all_ok ? kExitTrue : kExitFalse;
}

int run_outline_verify(const std::string& input) {
  const widealloc::OutlineRectangle c = widealloc::parse_outline_json(
      widealloc::detail::parse_json_payload(load_payload(input)));
  const widealloc::OutlineVerdict v = widealloc::verify_outline(c);
  if (v.ok) {
    std::cout << "ok\n";
    return kExitTrue;
  }
  std::cout << v.violation->describe() << "\n";
  return kExitFalse;
}

int run_outline_reduce(const std::string& latin_path,
                       const std::string& partition_path) {
  const widealloc::LatinSquare L =
      widealloc::parse_latin_text(load_file(latin_path));
  const widealloc::ReductionPartition part = widealloc::parse_partition_json(
      widealloc::detail::parse_json_payload(load_file(partition_path)));
  emit_json(widealloc::outline_to_json(widealloc::reduce_latin(L, part)));
  return kExitTrue;
}

int run_outline_reconstruct(const std::string& input, bool json) {
  const widealloc::OutlineRectangle c = widealloc::parse_outline_json(
      widealloc::detail::parse_json_payload(load_payload(input)));
  const widealloc::ReconstructedSquare rec = widealloc::outline_to_latin(c);
  if (json) {
    ordered_json j;
    j["n"] = rec.square.order();
    ordered_json rows = ordered_json::array();
    for (long long r = 0; r < rec.square.order(); ++r) {
      ordered_json row = ordered_json::array();
      for (long long col = 0; col < rec.square.order(); ++col)
        row.push_back(rec.square.at(r, col));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["partition"] = widealloc::partition_to_json(rec.part);
    emit_json(j);
  } else {
    std::cout << widealloc::latin_to_text(rec.square);
  }
  return kExitTrue;
}

struct SearchArgs {
  long long max_cells = 16;
  int max_p = 0;
  int jobs = 1;
};

int run_search(const SearchArgs& args) {
  widealloc::SearchOptions opts;
  opts.max_cells = args.max_cells;
  opts.max_p = args.max_p;
  opts.jobs = args.jobs;
  const widealloc::HarnessReport report = widealloc::run_search(opts);
  emit_json(widealloc::harness_report_to_json(report));
  return report.all_passed() ? kExitTrue : kExitFalse;
}

struct RenderArgs {
  std::string input;
  std::string format = "ascii";
  std::string out;
};

int run_render(const RenderArgs& args) {
  const std::string payload = load_payload(args.input);
  // A JSON payload whose "rows" holds arrays is a filling; anything else is
  // a diagram.
  bool is_filling = false;
  for (char ch : payload) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') {
      const ordered_json j = widealloc::detail::parse_json_payload(payload);
      is_filling = j.contains("rows") && j.at("rows").is_array() &&
                   !j.at("rows").empty() && j.at("rows")[0].is_array();
    }
    break;
  }
  std::string text;
  if (is_filling) {
    const widealloc::LatinFilling f = widealloc::parse_filling_json(
        widealloc::detail::parse_json_payload(payload));
    text = args.format == "svg" ? widealloc::render_filling_svg(f)
                                : widealloc::render_filling_ascii(f);
  } else {
    const widealloc::YoungDiagram y = widealloc::parse_diagram(payload);
    text = args.format == "svg" ? widealloc::render_diagram_svg(y)
                                : widealloc::render_diagram_ascii(y);
  }
  write_output(text, args.out);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wide Young diagrams: wideness checks, block allocations, and "
               "Latin fillings"};
  app.require_subcommand(1);

  CheckWideArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check-wide", "Decide whether a Young diagram is wide");
  check->add_option("input", check_args.input,
                    "diagram (file, '-' for stdin, or inline text)")
      ->required();
  check->add_option("--method", check_args.method, "decision procedure")
      ->check(CLI::IsMember({"oracle", "tails", "fast", "all"}));
  check->add_flag("--json", check_args.json, "emit a JSON report");

  AllocateArgs alloc_args;
  CLI::App* alloc = app.add_subcommand(
      "allocate", "Build a block allocation for a wide diagram (p <= 3)");
  alloc->add_option("input", alloc_args.input,
                    "diagram (file, '-' for stdin, or inline text)")
      ->required();
  alloc->add_flag("--json", alloc_args.json, "emit JSON");
  alloc->add_flag("--residuals", alloc_args.residuals,
                  "include residual capacities (p = 3 only)");

  FillArgs fill_args;
  CLI::App* fill =
      app.add_subcommand("fill", "Construct a Latin filling of a diagram");
  fill->add_option("input", fill_args.input,
                   "diagram (file, '-' for stdin, or inline text)")
      ->required();
  fill->add_option("--method", fill_args.method,
                   "pipeline (constructive, p <= 3) or exact (backtracking)")
      ->check(CLI::IsMember({"pipeline", "exact"}));
  fill->add_option("--render", fill_args.render, "output form")
      ->check(CLI::IsMember({"ascii", "svg"}));
  fill->add_flag("--json", fill_args.json, "emit JSON instead of a rendering");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Check artifacts against a diagram");
  verify->add_option("--filling", verify_args.filling, "filling JSON file");
  verify->add_option("--diagram", verify_args.diagram,
                     "diagram (file, '-' for stdin, or inline text)");
  verify->add_option("--allocation", verify_args.allocation,
                     "allocation JSON file");
  verify->add_option("--outline", verify_args.outline,
                     "outline rectangle JSON file");
  verify->add_flag("--json", verify_args.json, "emit JSON");

  CLI::App* outline =
      app.add_subcommand("outline", "Outline-rectangle operations");
  outline->require_subcommand(1);
  std::string outline_input;
  CLI::App* outline_verify = outline->add_subcommand(
      "verify", "Check the outline conditions");
  outline_verify
      ->add_option("input", outline_input, "outline JSON (file, '-', inline)")
      ->required();
  std::string reduce_latin_path, reduce_partition_path;
  CLI::App* outline_reduce = outline->add_subcommand(
      "reduce", "Amalgamate a Latin square by a partition triple");
  outline_reduce->add_option("--latin", reduce_latin_path, "Latin square text")
      ->required();
  outline_reduce
      ->add_option("--partition", reduce_partition_path, "partition JSON")
      ->required();
  std::string reconstruct_input;
  bool reconstruct_json = false;
  CLI::App* outline_reconstruct = outline->add_subcommand(
      "reconstruct", "Lift an outline rectangle to a Latin square");
  outline_reconstruct
      ->add_option("input", reconstruct_input,
                   "outline JSON (file, '-', inline)")
      ->required();
  outline_reconstruct->add_flag("--json", reconstruct_json, "emit JSON");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search", "Cross-check every diagram up to a cell bound");
  search->add_option("--max-cells", search_args.max_cells,
                     "largest diagram size to enumerate (<= 64)");
  search->add_option("--max-p", search_args.max_p,
                     "limit on distinct row lengths (0 = none)");
  search->add_option("--jobs", search_args.jobs, "worker threads");

  RenderArgs render_args;
  CLI::App* render =
      app.add_subcommand("render", "Render a diagram or filling");
  render->add_option("input", render_args.input,
                     "diagram or filling (file, '-' for stdin, or inline)")
      ->required();
  render->add_option("--format", render_args.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", render_args.out, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check_wide(check_args);
    if (alloc->parsed()) return run_allocate(alloc_args);
    if (fill->parsed()) return run_fill(fill_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (outline->parsed()) {
      if (outline_verify->parsed()) return run_outline_verify(outline_input);
      if (outline_reduce->parsed())
        return run_outline_reduce(reduce_latin_path, reduce_partition_path);
      if (outline_reconstruct->parsed())
        return run_outline_reconstruct(reconstruct_input, reconstruct_json);
    }
    if (search->parsed()) return run_search(search_args);
    if (render->parsed()) return run_render(render_args);
    std::cerr << "no command given\n";
    return kExitUsage;
  } catch (const widealloc::NotWideError& e) {
    std::cout << "not wide: " << e.what() << "\n";
    return kExitFalse;
  } catch (const widealloc::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const widealloc::ScaleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const widealloc::InternalInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitInternal;
  }
}
