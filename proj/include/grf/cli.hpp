#pragma once

// Library side of the `arbrf` command-line tool: comparison records, their CSV
// form, the batch drivers and the argument-level entry point.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grf/arboreal.hpp"
#include "grf/cost.hpp"
#include "grf/model.hpp"

namespace grf::cli {

enum class Mode { Arboreal, Free, Both };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode mode) noexcept;

/// Locale-independent shortest round-trip form; "inf"/"-inf"/"nan" otherwise.
std::string format_number(double value);
double parse_number(std::string_view text);

/// One compared pair of trees.
struct RunRecord {
  std::size_t tree_i = 0;
  std::size_t tree_j = 0;
  std::string metric;
  std::string mode;
  double cost_lower = 0.0;
  double cost_upper = 0.0;
  double weight_lower = 0.0;
  double weight_upper = 0.0;
  std::string status;  // OPTIMAL, FEASIBLE_TIMEOUT or ERROR
  double gap_percent = 0.0;
  double wall_time_ms = 0.0;
  std::size_t matched_clades = 0;
  std::size_t violations = 0;
  std::size_t rf = 0;
  std::uint64_t nodes = 0;
  std::string error;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string csv_header();
std::string to_csv_row(const RunRecord& r);
/// Inverse of to_csv_row. Throws InvalidArgument on malformed rows.
RunRecord parse_csv_row(std::string_view line);

/// Compares two trees in one mode (Free or Arboreal).
RunRecord compare(const Tree& t1, const Tree& t2, std::size_t i, std::size_t j, const CostFn& f,
                  Mode mode, const SolveParams& params);

struct MatrixOptions {
  std::size_t first = 0;  // zero: all trees
  bool include_self = false;
  CostFn metric = CostFn::jaccard(1);
  Mode mode = Mode::Arboreal;
  SolveParams params;
  unsigned jobs = 1;
};

/// All-against-all comparison of the first trees, rows sorted by (i, j).
/// A failing pair yields an ERROR row; the run goes on.
std::vector<RunRecord> compare_all(const std::vector<Tree>& trees, const MatrixOptions& options);

struct Histogram {
  std::string name;
  std::vector<double> edges;  // bucket b is [edges[b], edges[b+1])
  std::vector<std::size_t> counts;
  std::size_t unbounded = 0;  // values without a finite bucket, e.g. gap n/a
};

/// Running times of optimal rows and gaps of timed-out rows.
std::vector<Histogram> summarize(const std::vector<RunRecord>& records, double time_limit_s);

struct KSweepRow {
  int k = 0;
  double arboreal = 0.0;  // cost upper bound (the incumbent's cost)
  std::string arboreal_status;
  double free = 0.0;
  std::size_t matched_clades = 0;  // size of the arboreal matching
  std::size_t violations = 0;      // conflicts inside the free matching
  std::size_t rf = 0;
};

std::vector<KSweepRow> ksweep(const Tree& t1, const Tree& t2, int kmax, Mode mode,
                              const SolveParams& params);

/// One line of a node-correspondence report; a missing side is a gap.
struct Correspondence {
  std::vector<std::string> clade_1;
  std::vector<std::string> clade_2;
  double delta = 0.0;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct CorrespondenceReport {
  std::string metric;
  std::string mode;
  std::string status;
  double distance = 0.0;
  std::vector<Correspondence> rows;
};

CorrespondenceReport correspond(const Tree& t1, const Tree& t2, const CostFn& f, Mode mode,
                                const SolveParams& params);

std::string to_tsv(const CorrespondenceReport& report);
std::string to_json(const CorrespondenceReport& report);

/// Runs the tool; args exclude the program name. Returns the exit code:
/// 0 success, 1 error, 2 a time limit was hit before optimality.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grf::cli
