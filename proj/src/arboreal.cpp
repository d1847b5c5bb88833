#include "grf/arboreal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <queue>

#include "grf/error.hpp"

namespace grf {

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Optimal: return "OPTIMAL";
    case SolveStatus::FeasibleTimeout: return "FEASIBLE_TIMEOUT";
    case SolveStatus::InfeasibleNever: return "INFEASIBLE_NEVER";
  }
  return "?";
}

double gap_percent(double lower, double upper, double tolerance) {
  if (upper - lower <= tolerance) return 0.0;
  if (lower <= 0.0) return kInfinity;
  return 100.0 * (upper - lower) / lower;
}

namespace {

using Clock = std::chrono::steady_clock;

// Branching decisions form a persistent list shared between siblings.
struct Decision {
  std::size_t pair;
  bool include;
  std::shared_ptr<const Decision> parent;
};

struct Node {
  double bound;  // valid upper bound for every matching below this node
  std::size_t depth;
  std::uint64_t seq;
  std::shared_ptr<const Decision> decisions;
};

struct NodeOrder {
  // priority_queue pops the "largest": best bound, then deepest, then oldest
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

class Search {
 public:
  Search(const CladeSet& c1, const CladeSet& c2, const CostFn& f, const SolveParams& params)
      : c1_(c1), c2_(c2), f_(f), params_(params), rows_(c1.size()), cols_(c2.size()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const double w = weight(f, c1[i], c2[j]);
        if (w > params.tolerance) pairs_.push_back({i, j, w});
      }
    rel1_.resize(rows_ * rows_);
    for (std::size_t a = 0; a < rows_; ++a)
      for (std::size_t b = 0; b < rows_; ++b) rel1_[a * rows_ + b] = relate(c1[a], c1[b]);
    rel2_.resize(cols_ * cols_);
    for (std::size_t a = 0; a < cols_; ++a)
      for (std::size_t b = 0; b < cols_; ++b) rel2_[a * cols_ + b] = relate(c2[a], c2[b]);

    by_weight_.resize(pairs_.size());
    std::iota(by_weight_.begin(), by_weight_.end(), std::size_t{0});
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](std::size_t a, std::size_t b) { return pairs_[a].w > pairs_[b].w; });
    excluded_.assign(pairs_.size(), 0);
  }

  SolveResult run() {
    const auto start = Clock::now();
    const bool timed = params_.time_limit.count() > 0;
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(params_.time_limit);

    SolveResult result;
    result.empty_cost = empty_matching_cost(f_, c1_, c2_);

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(Node{kInfinity, 0, seq_++, nullptr});
    bool stopped = false;

    while (!open.empty()) {
      if (open.top().bound <= best_weight_ + params_.tolerance) break;
      if (result.nodes_explored > 0) {
        if ((timed && Clock::now() >= deadline) ||
            (params_.node_limit > 0 && result.nodes_explored >= params_.node_limit) ||
            (params_.cancel && params_.cancel->load(std::memory_order_relaxed))) {
          stopped = true;
          break;
        }
      }
      Node node = open.top();
      open.pop();
      ++result.nodes_explored;
      expand(node, open);
      const double top = open.empty() ? best_weight_ : open.top().bound;
      publish(std::max(best_weight_, top));
    }

    double upper = best_weight_;
    if (!open.empty()) upper = std::max(upper, open.top().bound);
    upper = std::min(upper, reported_upper_);
    upper = std::max(upper, best_weight_);

    result.incumbent = make_matching(best_pairs_, f_, c1_, c2_);
    result.lower_bound = best_weight_;
    result.upper_bound = upper;
    result.status = (!stopped || upper - best_weight_ <= params_.tolerance)
                        ? SolveStatus::Optimal
                        : SolveStatus::FeasibleTimeout;
    result.gap_percent = gap_percent(result.lower_bound, result.upper_bound, params_.tolerance);
    result.wall_time = Clock::now() - start;
    return result;
  }

 private:
  struct Candidate {
    std::size_t i, j;
    double w;
  };

  bool compatible(std::size_t a, std::size_t b) const {
    const auto& p = pairs_[a];
    const auto& q = pairs_[b];
    if (p.i == q.i || p.j == q.j) return false;
    return !conflict(rel1_[p.i * rows_ + q.i], rel2_[p.j * cols_ + q.j]);
  }

  bool compatible_with_all(std::size_t a, const std::vector<std::size_t>& set) const {
    return std::all_of(set.begin(), set.end(), [&](std::size_t b) { return compatible(a, b); });
  }

  double total(const std::vector<std::size_t>& set) const {
    double s = 0.0;
    for (auto p : set) s += pairs_[p].w;
    return s;
  }

  void publish(double upper) {
    upper = std::max(std::min(upper, reported_upper_), best_weight_);
    if (upper != reported_upper_ || best_weight_ != reported_lower_) {
      reported_upper_ = upper;
      reported_lower_ = best_weight_;
      if (params_.on_bounds) params_.on_bounds(reported_lower_, reported_upper_);
    }
  }

  void offer(const std::vector<std::size_t>& set, double w) {
    if (w <= best_weight_) return;
    best_weight_ = w;
    best_pairs_.clear();
    for (auto p : set) best_pairs_.emplace_back(pairs_[p].i, pairs_[p].j);
  }

  void expand(const Node& node, std::priority_queue<Node, std::vector<Node>, NodeOrder>& open) {
    // decode branching decisions
    std::vector<std::size_t> forced;
    std::vector<std::size_t> marked;
    for (auto d = node.decisions.get(); d; d = d->parent.get()) {
      if (d->include) {
        forced.push_back(d->pair);
      } else {
        excluded_[d->pair] = 1;
        marked.push_back(d->pair);
      }
    }
    std::vector<char> row_used(rows_, 0), col_used(cols_, 0);
    for (auto p : forced) row_used[pairs_[p].i] = col_used[pairs_[p].j] = 1;

    std::vector<std::size_t> allowed;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (excluded_[p] || row_used[pairs_[p].i] || col_used[pairs_[p].j]) continue;
      if (compatible_with_all(p, forced)) allowed.push_back(p);
    }
    for (auto p : marked) excluded_[p] = 0;

    // assignment relaxation over the free rows and columns
    std::vector<std::size_t> row_index(rows_, kUnassigned), col_index(cols_, kUnassigned);
    std::vector<std::size_t> free_rows, free_cols;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!row_used[i]) {
        row_index[i] = free_rows.size();
        free_rows.push_back(i);
      }
    for (std::size_t j = 0; j < cols_; ++j)
      if (!col_used[j]) {
        col_index[j] = free_cols.size();
        free_cols.push_back(j);
      }
    const std::size_t nr = free_rows.size(), nc = free_cols.size();
    std::vector<double> w(nr * nc, 0.0);
    std::vector<std::size_t> pair_at(nr * nc, kUnassigned);
    for (auto p : allowed) {
      const auto cell = row_index[pairs_[p].i] * nc + col_index[pairs_[p].j];
      w[cell] = pairs_[p].w;
      pair_at[cell] = p;
    }
    const auto assign = max_weight_assignment(w, nr, nc);
    std::vector<std::size_t> relaxed;
    for (std::size_t r = 0; r < nr; ++r)
      if (assign[r] != kUnassigned && pair_at[r * nc + assign[r]] != kUnassigned)
        relaxed.push_back(pair_at[r * nc + assign[r]]);

    const double forced_weight = total(forced);
    const double bound = std::min(node.bound, forced_weight + total(relaxed));
    if (bound <= best_weight_ + params_.tolerance) return;

    // conflicts inside the relaxed solution; forced pairs are compatible by construction
    std::vector<std::size_t> conflicted;
    for (std::size_t a = 0; a < relaxed.size(); ++a) {
      bool hit = false;
      for (std::size_t b = 0; b < relaxed.size() && !hit; ++b)
        hit = a != b && !compatible(relaxed[a], relaxed[b]);
      if (hit) conflicted.push_back(relaxed[a]);
    }

    if (conflicted.empty()) {
      auto all = forced;
      all.insert(all.end(), relaxed.begin(), relaxed.end());
      offer(all, bound);
      return;
    }

    // greedy repair, heaviest pairs first, then fill free rows and columns
    std::stable_sort(relaxed.begin(), relaxed.end(), [&](std::size_t a, std::size_t b) {
      return pairs_[a].w > pairs_[b].w || (pairs_[a].w == pairs_[b].w && a < b);
    });
    auto repaired = forced;
    for (auto p : relaxed)
      if (compatible_with_all(p, repaired)) repaired.push_back(p);
    std::vector<char> in_allowed(pairs_.size(), 0);
    for (auto p : allowed) in_allowed[p] = 1;
    for (auto p : repaired) row_used[pairs_[p].i] = col_used[pairs_[p].j] = 1;
    for (auto p : by_weight_) {
      if (!in_allowed[p] || row_used[pairs_[p].i] || col_used[pairs_[p].j]) continue;
      if (compatible_with_all(p, repaired)) {
        repaired.push_back(p);
        row_used[pairs_[p].i] = col_used[pairs_[p].j] = 1;
      }
    }
    offer(repaired, total(repaired));
    if (bound <= best_weight_ + params_.tolerance) return;

    // branch on the heaviest conflicting pair
    std::size_t pick = conflicted.front();
    for (auto p : conflicted)
      if (pairs_[p].w > pairs_[pick].w || (pairs_[p].w == pairs_[pick].w && p < pick)) pick = p;

    auto with = std::make_shared<const Decision>(Decision{pick, true, node.decisions});
    auto without = std::make_shared<const Decision>(Decision{pick, false, node.decisions});
    open.push(Node{bound, node.depth + 1, seq_++, std::move(with)});
    open.push(Node{bound, node.depth + 1, seq_++, std::move(without)});
  }

  const CladeSet& c1_;
  const CladeSet& c2_;
  const CostFn& f_;
  const SolveParams& params_;
  std::size_t rows_, cols_;

  std::vector<Candidate> pairs_;
  std::vector<Relation> rel1_, rel2_;
  std::vector<std::size_t> by_weight_;
  std::vector<char> excluded_;

  double best_weight_ = 0.0;
  PairList best_pairs_;
  double reported_lower_ = -1.0;
  double reported_upper_ = kInfinity;
  std::uint64_t seq_ = 0;
};

}  // namespace

SolveResult solve(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                  const SolveParams& params) {
  require_same_taxa(c1, c2);
  if (!(params.tolerance > 0.0))
    throw Error(ErrorCode::InvalidArgument, "solver tolerance must be positive");
  return Search(c1, c2, f, params).run();
}

GrfDistance grf_distance(const Tree& t1, const Tree& t2, const CostFn& f,
                         const SolveParams& params) {
  require_same_taxa(t1, t2);
  const auto c1 = extract_clades(t1);
  const auto c2 = extract_clades(t2);
  GrfDistance out;
  out.result = solve(c1, c2, f, params);
  out.cost_lower = out.result.cost_lower();
  out.cost_upper = out.result.cost_upper();
  return out;
}

}  // namespace grf
