#pragma once

#include <algorithm>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "widealloc/allocation.hpp"
#include "widealloc/diagram.hpp"
#include "widealloc/enumerate.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"
#include "widealloc/pipeline.hpp"
#include "widealloc/serialize.hpp"
#include "widealloc/wideness.hpp"

namespace widealloc {

inline constexpr long long kMaxSearchCells = 64;

struct SearchOptions {
  long long max_cells = 16;
  int max_p = 0;  // 0 = no limit on distinct row lengths
  int jobs = 1;
};

struct Disagreement {
  std::string diagram;
  std::string check;
  std::string details;

  friend bool operator<(const Disagreement& a, const Disagreement& b) {
    return std::tie(a.diagram, a.check, a.details) <
           std::tie(b.diagram, b.check, b.details);
  }
  bool operator==(const Disagreement&) const = default;
};

struct HarnessReport {
  SearchOptions bounds;
  long long diagrams = 0;
  long long wide = 0;
  long long latin = 0;
  long long allocated = 0;
  std::vector<Disagreement> disagreements;

  bool all_passed() const { return disagreements.empty(); }
};

namespace detail {

inline void record(HarnessReport& r, const YoungDiagram& y,
                   const std::string& check, const std::string& details) {
  r.disagreements.push_back({y.to_text(), check, details});
}

// All cross-checks for one diagram of the corpus.
inline void search_one(const YoungDiagram& y, HarnessReport& r) {
  ++r.diagrams;

  const WidenessReport fast = is_wide_fast(y);
  const WidenessReport tails = is_wide_tails(y);
  if (tails.wide != fast.wide)
    record(r, y, "wideness-methods",
           std::string("tails says ") + (tails.wide ? "wide" : "not wide") +
               ", fast says " + (fast.wide ? "wide" : "not wide"));
  if (y.num_rows() <= kOracleMaxRows) {
    const WidenessReport oracle = is_wide_oracle(y);
    if (oracle.wide != fast.wide)
      record(r, y, "wideness-methods",
             std::string("oracle says ") + (oracle.wide ? "wide" : "not wide") +
                 ", fast says " + (fast.wide ? "wide" : "not wide"));
  }
  const bool wide = fast.wide;
  if (wide) ++r.wide;

  const ExactFillResult exact = fill_exact(y);
  if (exact.found()) ++r.latin;
  if (exact.found() != wide)
    record(r, y, "wide-vs-latin",
           exact.found() ? "a Latin filling exists but the diagram is not wide"
                         : "the diagram is wide but has no Latin filling");

  if (y.num_blocks() <= 3) {
    if (wide) {
      try {
        const PipelineResult out = fill_via_allocation(y);
        ++r.allocated;
        const FillingVerdict fv = verify_filling(y, out.filling);
        if (!fv.ok)
          record(r, y, "pipeline-fill", fv.violation->describe());
        const Allocation induced = allocation_from_filling(y, out.filling);
        const AllocationVerdict av = verify_allocation(y, induced);
        if (!av.ok)
          record(r, y, "pipeline-allocation", av.violation->describe());
      } catch (const std::exception& e) {
        record(r, y, "pipeline-fill", e.what());
      }
    } else {
      try {
        allocate(y);
        record(r, y, "allocate-not-wide",
               "allocate succeeded on a diagram that is not wide");
      } catch (const NotWideError&) {
        // Expected: the constructive route must refuse non-wide input.
      }
    }
  }
}

}  // namespace detail

// Enumerates the corpus and cross-checks every diagram; see search_one for
// the per-diagram battery. Sharding over --jobs is by enumeration index, and
// the merged report is sorted, so the payload does not depend on job count.
inline HarnessReport run_search(const SearchOptions& opts) {
  if (opts.max_cells > kMaxSearchCells)
    throw ScaleLimitError("search cell bound " +
                          std::to_string(opts.max_cells) +
                          " exceeds the gate of " +
                          std::to_string(kMaxSearchCells));
  detail::require(opts.max_cells >= 0, "cell bound must be nonnegative");
  detail::require(opts.max_p >= 0, "distinct-part bound must be nonnegative");
  detail::require(opts.jobs >= 1, "job count must be positive");

  const int jobs = opts.jobs;
  std::vector<HarnessReport> partial(static_cast<std::size_t>(jobs));
  auto worker = [&](int wid) {
    HarnessReport& local = partial[static_cast<std::size_t>(wid)];
    long long index = 0;
    for_each_partition(opts.max_cells, opts.max_p,
                       [&](const std::vector<long long>& rows) {
                         if (index++ % jobs != wid) return;
                         detail::search_one(
                             YoungDiagram::from_row_lengths(rows), local);
                       });
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int wid = 0; wid < jobs; ++wid) threads.emplace_back(worker, wid);
    for (std::thread& t : threads) t.join();
  }

  HarnessReport report;
  report.bounds = opts;
  for (HarnessReport& part : partial) {
    report.diagrams += part.diagrams;
    report.wide += part.wide;
    report.latin += part.latin;
    report.allocated += part.allocated;
    report.disagreements.insert(report.disagreements.end(),
                                part.disagreements.begin(),
                                part.disagreements.end());
  }
  std::sort(report.disagreements.begin(), report.disagreements.end());
  return report;
}

inline ordered_json harness_report_to_json(const HarnessReport& r) {
  ordered_json j;
  j["bounds"] = {{"max_cells", r.bounds.max_cells}, {"max_p", r.bounds.max_p}};
  j["counts"] = {{"diagrams", r.diagrams},
                 {"wide", r.wide},
                 {"latin", r.latin},
                 {"allocated", r.allocated}};
  ordered_json rows = ordered_json::array();
  for (const Disagreement& d : r.disagreements)
    rows.push_back({{"diagram", d.diagram},
                    {"check", d.check},
                    {"details", d.details}});
  j["disagreements"] = std::move(rows);
  return j;
}

}  // namespace widealloc
