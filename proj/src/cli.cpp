#include "grf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "grf/error.hpp"
#include "grf/matching.hpp"
#include "grf/newick.hpp"
#include "grf/rf.hpp"

namespace grf::cli {

Mode parse_mode(std::string_view text) {
  if (text == "arboreal") return Mode::Arboreal;
  if (text == "free") return Mode::Free;
  if (text == "both") return Mode::Both;
  throw Error(ErrorCode::InvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected arboreal, free or both)");
}

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Arboreal: return "arboreal";
    case Mode::Free: return "free";
    case Mode::Both: return "both";
  }
  return "?";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error(ErrorCode::InvalidArgument, "number formatting failed");
  return std::string(buf, ptr);
}

double parse_number(std::string_view text) {
  if (text == "inf" || text == "n/a") return kInfinity;
  if (text == "-inf") return -kInfinity;
  if (text == "nan") return std::nan("");
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
  return value;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back().push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw Error(ErrorCode::InvalidArgument, "unterminated quote in CSV row");
  return fields;
}

std::string format_gap(double gap) { return std::isinf(gap) ? "n/a" : format_number(gap); }

std::uint64_t parse_count(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument, "not a count: '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string csv_header() {
  return "tree_i,tree_j,metric,mode,cost_lower,cost_upper,weight_lower,weight_upper,status,"
         "gap_percent,wall_time_ms,matched_clades,violations,rf,nodes,error";
}

std::string to_csv_row(const RunRecord& r) {
  std::string out;
  out += std::to_string(r.tree_i) + ',';
  out += std::to_string(r.tree_j) + ',';
  out += csv_field(r.metric) + ',';
  out += csv_field(r.mode) + ',';
  out += format_number(r.cost_lower) + ',';
  out += format_number(r.cost_upper) + ',';
  out += format_number(r.weight_lower) + ',';
  out += format_number(r.weight_upper) + ',';
  out += csv_field(r.status) + ',';
  out += format_gap(r.gap_percent) + ',';
  out += format_number(r.wall_time_ms) + ',';
  out += std::to_string(r.matched_clades) + ',';
  out += std::to_string(r.violations) + ',';
  out += std::to_string(r.rf) + ',';
  out += std::to_string(r.nodes) + ',';
  out += csv_field(r.error);
  return out;
}

RunRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split_csv(line);
  if (f.size() != 16)
    throw Error(ErrorCode::InvalidArgument,
                "expected 16 CSV fields, got " + std::to_string(f.size()));
  RunRecord r;
  r.tree_i = parse_count(f[0]);
  r.tree_j = parse_count(f[1]);
  r.metric = f[2];
  r.mode = f[3];
  r.cost_lower = parse_number(f[4]);
  r.cost_upper = parse_number(f[5]);
  r.weight_lower = parse_number(f[6]);
  r.weight_upper = parse_number(f[7]);
  r.status = f[8];
  r.gap_percent = parse_number(f[9]);
  r.wall_time_ms = parse_number(f[10]);
  r.matched_clades = parse_count(f[11]);
  r.violations = parse_count(f[12]);
  r.rf = parse_count(f[13]);
  r.nodes = parse_count(f[14]);
  r.error = f[15];
  return r;
}

// ---------------------------------------------------------------------------
// drivers

RunRecord compare(const Tree& t1, const Tree& t2, std::size_t i, std::size_t j, const CostFn& f,
                  Mode mode, const SolveParams& params) {
  const auto start = std::chrono::steady_clock::now();
  require_same_taxa(t1, t2);
  const auto c1 = extract_clades(t1);
  const auto c2 = extract_clades(t2);

  RunRecord r;
  r.tree_i = i;
  r.tree_j = j;
  r.metric = f.name();
  r.mode = std::string(to_string(mode));
  r.rf = rf_distance(c1, c2);

  if (mode == Mode::Free) {
    const auto m = min_cost_matching(c1, c2, f);
    r.cost_lower = r.cost_upper = m.cost;
    r.weight_lower = r.weight_upper = m.weight_sum;
    r.status = std::string(to_string(SolveStatus::Optimal));
    r.gap_percent = 0.0;
    r.matched_clades = m.size();
    r.violations = count_violations(m, c1, c2);
  } else {
    const auto res = solve(c1, c2, f, params);
    r.cost_lower = res.cost_lower();
    r.cost_upper = res.cost_upper();
    r.weight_lower = res.lower_bound;
    r.weight_upper = res.upper_bound;
    r.status = std::string(to_string(res.status));
    r.gap_percent = res.gap_percent;
    r.matched_clades = res.incumbent.size();
    r.violations = count_violations(res.incumbent, c1, c2);
    r.nodes = res.nodes_explored;
  }
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<RunRecord> compare_all(const std::vector<Tree>& trees, const MatrixOptions& options) {
  const std::size_t m =
      options.first == 0 ? trees.size() : std::min(options.first, trees.size());
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = options.include_self ? i : i + 1; j < m; ++j) jobs.emplace_back(i, j);

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const auto k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      const auto [i, j] = jobs[k];
      try {
        records[k] = compare(trees[i], trees[j], i, j, options.metric, options.mode, options.params);
      } catch (const std::exception& e) {
        RunRecord r;
        r.tree_i = i;
        r.tree_j = j;
        r.metric = options.metric.name();
        r.mode = std::string(to_string(options.mode));
        r.cost_lower = r.cost_upper = r.weight_lower = r.weight_upper = std::nan("");
        r.gap_percent = kInfinity;
        r.status = "ERROR";
        r.error = e.what();
        records[k] = std::move(r);
      }
    }
  };

  const unsigned n_threads =
      std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

std::vector<Histogram> summarize(const std::vector<RunRecord>& records, double time_limit_s) {
  const std::string optimal(to_string(SolveStatus::Optimal));
  const std::string timeout(to_string(SolveStatus::FeasibleTimeout));

  double span_ms = time_limit_s * 1000.0;
  if (span_ms <= 0.0) {
    span_ms = 0.0;
    for (const auto& r : records)
      if (r.status == optimal) span_ms = std::max(span_ms, r.wall_time_ms);
    if (span_ms <= 0.0) span_ms = 1.0;
  }
  Histogram time{"wall_time_ms", {}, std::vector<std::size_t>(10, 0), 0};
  for (int b = 0; b <= 10; ++b) time.edges.push_back(span_ms * b / 10.0);
  for (const auto& r : records) {
    if (r.status != optimal) continue;
    auto b = static_cast<std::size_t>(r.wall_time_ms / span_ms * 10.0);
    time.counts[std::min<std::size_t>(b, 9)]++;
  }

  Histogram gap{"gap_percent", {0, 1, 2, 5, 10, 20, 50, 100, kInfinity}, {}, 0};
  gap.counts.assign(gap.edges.size() - 1, 0);
  for (const auto& r : records) {
    if (r.status != timeout) continue;
    if (std::isinf(r.gap_percent) || std::isnan(r.gap_percent)) {
      ++gap.unbounded;
      continue;
    }
    for (std::size_t b = 0; b + 1 < gap.edges.size(); ++b)
      if (r.gap_percent < gap.edges[b + 1]) {
        ++gap.counts[b];
        break;
      }
  }
  return {time, gap};
}

std::vector<KSweepRow> ksweep(const Tree& t1, const Tree& t2, int kmax, Mode mode,
                              const SolveParams& params) {
  require_same_taxa(t1, t2);
  if (kmax < 1) throw Error(ErrorCode::InvalidArgument, "kmax must be at least 1");
  const auto c1 = extract_clades(t1);
  const auto c2 = extract_clades(t2);
  const auto rf = rf_distance(c1, c2);

  std::vector<KSweepRow> rows;
  for (int k = 1; k <= kmax; ++k) {
    const auto f = CostFn::jaccard(k);
    KSweepRow row;
    row.k = k;
    row.rf = rf;
    if (mode != Mode::Free) {
      const auto res = solve(c1, c2, f, params);
      row.arboreal = res.cost_upper();
      row.arboreal_status = std::string(to_string(res.status));
      row.matched_clades = res.incumbent.size();
    }
    if (mode != Mode::Arboreal) {
      const auto m = min_cost_matching(c1, c2, f);
      row.free = m.cost;
      row.violations = count_violations(m, c1, c2);
      if (mode == Mode::Free) row.matched_clades = m.size();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// correspondence reports

namespace {

std::vector<std::string> labels_of(const Clade& c, const Taxa& taxa) {
  std::vector<std::string> out;
  for (auto t : c.members()) out.push_back(taxa.name(t));
  return out;
}

std::string join_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out.push_back(',');
    out += newick::format_label(labels[i]);
  }
  return out;
}

}  // namespace

CorrespondenceReport correspond(const Tree& t1, const Tree& t2, const CostFn& f, Mode mode,
                                const SolveParams& params) {
  require_same_taxa(t1, t2);
  const auto c1 = extract_clades(t1);
  const auto c2 = extract_clades(t2);

  CorrespondenceReport report;
  report.metric = f.name();
  report.mode = std::string(to_string(mode));
  Matching m;
  if (mode == Mode::Free) {
    m = min_cost_matching(c1, c2, f);
    report.status = std::string(to_string(SolveStatus::Optimal));
  } else {
    const auto res = solve(c1, c2, f, params);
    m = res.incumbent;
    report.status = std::string(to_string(res.status));
  }
  report.distance = m.cost;

  const auto& taxa = t1.taxa();
  std::vector<char> used1(c1.size(), 0), used2(c2.size(), 0);
  for (const auto& [i, j] : m.pairs) {
    used1[i] = used2[j] = 1;
    report.rows.push_back({labels_of(c1[i], taxa), labels_of(c2[j], taxa), delta(f, c1[i], c2[j])});
  }
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (!used1[i]) report.rows.push_back({labels_of(c1[i], taxa), {}, delta(f, c1[i], gap)});
  for (std::size_t j = 0; j < c2.size(); ++j)
    if (!used2[j]) report.rows.push_back({{}, labels_of(c2[j], taxa), delta(f, gap, c2[j])});
  return report;
}

std::string to_tsv(const CorrespondenceReport& report) {
  std::string out = "clade_1\tclade_2\tdelta\n";
  for (const auto& row : report.rows)
    out += join_labels(row.clade_1) + '\t' + join_labels(row.clade_2) + '\t' +
           format_number(row.delta) + '\n';
  return out;
}

std::string to_json(const CorrespondenceReport& report) {
  nlohmann::json doc;
  doc["metric"] = report.metric;
  doc["mode"] = report.mode;
  doc["status"] = report.status;
  doc["distance"] = report.distance;
  auto rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["clade_1"] = row.clade_1.empty() ? nlohmann::json(nullptr) : nlohmann::json(row.clade_1);
    r["clade_2"] = row.clade_2.empty() ? nlohmann::json(nullptr) : nlohmann::json(row.clade_2);
    r["delta"] = row.delta;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// command line

namespace {

struct Common {
  std::string metric = "jaccard:1";
  std::string mode = "arboreal";
  double time_limit = 120.0;
  std::uint64_t node_limit = 0;

  SolveParams params() const {
    SolveParams p;
    p.time_limit = std::chrono::duration<double>(time_limit);
    p.node_limit = node_limit;
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_metric = true) {
  if (with_metric)
    cmd->add_option("--metric", c.metric, "rf, symdiff or jaccard:<k>")->capture_default_str();
  cmd->add_option("--mode", c.mode, "arboreal, free or both")->capture_default_str();
  cmd->add_option("--time-limit", c.time_limit, "seconds per comparison, 0 for none")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--node-limit", c.node_limit, "search nodes per comparison, 0 for none")
      ->capture_default_str();
}

struct TreeSelection {
  std::vector<std::string> files;
  std::vector<std::size_t> pair;
};

void add_selection(CLI::App* cmd, TreeSelection& s) {
  cmd->add_option("files", s.files, "one Newick file holding both trees, or two files")
      ->required()
      ->expected(1, 2);
  cmd->add_option("--pair", s.pair, "0-based tree indices (default: 0 1 in one file, 0 0 in two)")
      ->expected(2);
}

std::pair<Tree, Tree> load_pair(const TreeSelection& s) {
  if (s.files.size() == 1) {
    auto doc = newick::parse_file(s.files[0]);
    const std::size_t i = s.pair.empty() ? 0 : s.pair[0];
    const std::size_t j = s.pair.empty() ? 1 : s.pair[1];
    if (i >= doc.trees.size() || j >= doc.trees.size())
      throw Error(ErrorCode::InvalidArgument,
                  s.files[0] + " holds " + std::to_string(doc.trees.size()) + " tree(s)");
    return {doc.trees[i], doc.trees[j]};
  }
  auto a = newick::parse_file(s.files[0]);
  auto b = newick::parse_file(s.files[1]);
  if (!same_taxa(*a.taxa, *b.taxa))
    throw Error(ErrorCode::TaxaMismatch, "the two files have different leaf sets");
  const std::size_t i = s.pair.empty() ? 0 : s.pair[0];
  const std::size_t j = s.pair.empty() ? 0 : s.pair[1];
  if (i >= a.trees.size() || j >= b.trees.size())
    throw Error(ErrorCode::InvalidArgument, "tree index out of range");
  return {a.trees[i], b.trees[j]};
}

Mode single_mode(const std::string& text) {
  const auto mode = parse_mode(text);
  if (mode == Mode::Both)
    throw Error(ErrorCode::InvalidArgument, "mode 'both' is only available for ksweep");
  return mode;
}

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ARBRF_THREADS")) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return 1;
}

void print_record(std::ostream& out, const RunRecord& r) {
  if (r.status == to_string(SolveStatus::Optimal))
    out << format_number(r.cost_upper) << '\n';
  else
    out << '[' << format_number(r.cost_lower) << ", " << format_number(r.cost_upper) << "]\n";
  out << "status: " << r.status << '\n'
      << "metric: " << r.metric << '\n'
      << "mode: " << r.mode << '\n'
      << "cost_lower: " << format_number(r.cost_lower) << '\n'
      << "cost_upper: " << format_number(r.cost_upper) << '\n'
      << "weight_lower: " << format_number(r.weight_lower) << '\n'
      << "weight_upper: " << format_number(r.weight_upper) << '\n'
      << "gap_percent: " << format_gap(r.gap_percent) << '\n'
      << "wall_time_ms: " << format_number(r.wall_time_ms) << '\n'
      << "matched_clades: " << r.matched_clades << '\n'
      << "violations: " << r.violations << '\n'
      << "rf: " << r.rf << '\n'
      << "nodes: " << r.nodes << '\n';
}

int exit_code(std::string_view status) {
  return status == to_string(SolveStatus::Optimal) ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized (Jaccard-)Robinson-Foulds distances between rooted trees", "arbrf"};
  app.require_subcommand(1);

  Common dist_opts;
  TreeSelection dist_sel;
  bool dist_csv = false;
  auto* dist = app.add_subcommand("dist", "distance between two trees");
  add_selection(dist, dist_sel);
  add_common(dist, dist_opts);
  dist->add_flag("--csv", dist_csv, "print a CSV record instead of key: value lines");

  Common mx_opts;
  std::string mx_file, mx_out;
  std::size_t mx_first = 0;
  unsigned mx_jobs = 0;
  bool mx_self = false;
  auto* matrix = app.add_subcommand("matrix", "all-against-all comparison of a tree file");
  matrix->add_option("file", mx_file, "Newick file with at least two trees")->required();
  matrix->add_option("--first", mx_first, "compare only the first M trees (0: all)");
  matrix->add_option("--jobs", mx_jobs, "worker threads (0: $ARBRF_THREADS or 1)");
  matrix->add_option("--out", mx_out, "CSV output path (default: stdout)");
  matrix->add_flag("--include-self", mx_self, "also compare each tree with itself");
  add_common(matrix, mx_opts);

  Common ks_opts;
  ks_opts.mode = "both";
  TreeSelection ks_sel;
  int ks_kmax = 10;
  auto* sweep = app.add_subcommand("ksweep", "Jaccard distances for k = 1..kmax");
  add_selection(sweep, ks_sel);
  sweep->add_option("--kmax", ks_kmax, "largest order k")->capture_default_str();
  add_common(sweep, ks_opts, false);

  Common co_opts;
  TreeSelection co_sel;
  std::string co_format = "tsv";
  auto* corr = app.add_subcommand("correspond", "report the clade correspondence");
  add_selection(corr, co_sel);
  add_common(corr, co_opts);
  corr->add_option("--format", co_format, "tsv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"tsv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*dist) {
      const auto [t1, t2] = load_pair(dist_sel);
      const auto f = CostFn::parse(dist_opts.metric);
      const auto i = dist_sel.pair.empty() ? 0 : dist_sel.pair[0];
      const auto j = dist_sel.pair.empty() ? (dist_sel.files.size() == 1 ? 1 : 0) : dist_sel.pair[1];
      const auto r = compare(t1, t2, i, j, f, single_mode(dist_opts.mode), dist_opts.params());
      if (dist_csv)
        out << csv_header() << '\n' << to_csv_row(r) << '\n';
      else
        print_record(out, r);
      return exit_code(r.status);
    }

    if (*matrix) {
      auto doc = newick::parse_file(mx_file);
      if (doc.trees.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "matrix needs at least two trees");
      MatrixOptions o;
      o.first = mx_first;
      o.include_self = mx_self;
      o.metric = CostFn::parse(mx_opts.metric);
      o.mode = single_mode(mx_opts.mode);
      o.params = mx_opts.params();
      o.jobs = resolve_jobs(mx_jobs);
      const auto records = compare_all(doc.trees, o);

      std::ofstream file;
      if (!mx_out.empty()) {
        file.open(mx_out, std::ios::binary);
        if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + mx_out + "'");
      }
      std::ostream& csv = mx_out.empty() ? out : file;
      csv << csv_header() << '\n';
      for (const auto& r : records) csv << to_csv_row(r) << '\n';

      std::size_t optimal = 0, timeout = 0, errors = 0;
      for (const auto& r : records) {
        if (r.status == to_string(SolveStatus::Optimal)) ++optimal;
        else if (r.status == to_string(SolveStatus::FeasibleTimeout)) ++timeout;
        else ++errors;
      }
      std::ostream& summary = mx_out.empty() ? err : out;
      summary << "records,optimal,timeout,errors\n"
              << records.size() << ',' << optimal << ',' << timeout << ',' << errors << '\n'
              << "histogram,lower,upper,count\n";
      for (const auto& h : summarize(records, mx_opts.time_limit)) {
        for (std::size_t b = 0; b < h.counts.size(); ++b)
          summary << h.name << ',' << format_number(h.edges[b]) << ','
                  << format_number(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
        if (h.name == "gap_percent") summary << h.name << ",n/a,n/a," << h.unbounded << '\n';
      }
      return 0;
    }

    if (*sweep) {
      const auto [t1, t2] = load_pair(ks_sel);
      const auto mode = parse_mode(ks_opts.mode);
      const auto rows = ksweep(t1, t2, ks_kmax, mode, ks_opts.params());
      out << "k,d_jrf_arboreal,d_jrf_free,matched_clades,violations,d_rf,arboreal_status\n";
      bool timed_out = false;
      for (const auto& r : rows) {
        const bool arb = mode != Mode::Free;
        const bool fr = mode != Mode::Arboreal;
        out << r.k << ',' << (arb ? format_number(r.arboreal) : "") << ','
            << (fr ? format_number(r.free) : "") << ',' << r.matched_clades << ','
            << (fr ? std::to_string(r.violations) : "") << ',' << r.rf << ','
            << r.arboreal_status << '\n';
        timed_out = timed_out || (arb && r.arboreal_status != to_string(SolveStatus::Optimal));
      }
      return timed_out ? 2 : 0;
    }

    if (*corr) {
      const auto [t1, t2] = load_pair(co_sel);
      const auto report = correspond(t1, t2, CostFn::parse(co_opts.metric),
                                     single_mode(co_opts.mode), co_opts.params());
      if (report.status != to_string(SolveStatus::Optimal))
        err << "warning: time limit reached, reporting the best matching found\n";
      out << (co_format == "json" ? to_json(report) : to_tsv(report));
      return exit_code(report.status);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace grf::cli
