#include "grf/cost.hpp"

#include <charconv>
#include <cmath>

#include "grf/error.hpp"

namespace grf {

CostFn CostFn::jaccard(int order) {
  if (order < 1 || order > kMaxJaccardOrder)
    throw Error(ErrorCode::InvalidArgument,
                "Jaccard order must be in [1, " + std::to_string(kMaxJaccardOrder) + "]");
  return CostFn(Kind::Jaccard, order);
}

CostFn CostFn::parse(std::string_view text) {
  if (text == "rf") return rf();
  if (text == "symdiff") return symdiff();
  constexpr std::string_view prefix = "jaccard:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::InvalidArgument, "bad Jaccard order in '" + std::string(text) + "'");
    return jaccard(k);
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown metric '" + std::string(text) + "' (expected rf, symdiff or jaccard:<k>)");
}

std::string CostFn::name() const {
  switch (kind_) {
    case Kind::RfDelta: return "rf";
    case Kind::SymDiff: return "symdiff";
    case Kind::Jaccard: return "jaccard:" + std::to_string(order_);
  }
  return "?";
}

double delta(const CostFn& f, const Clade& a, const Clade& b) {
  switch (f.kind()) {
    case CostFn::Kind::RfDelta:
      return a == b ? 0.0 : kInfinity;
    case CostFn::Kind::SymDiff:
      return static_cast<double>(a.symmetric_difference_size(b));
    case CostFn::Kind::Jaccard: {
      const auto uni = a.union_size(b);
      if (uni == 0) return 0.0;
      const auto inter = a.intersection_size(b);
      if (inter == uni) return 0.0;
      const double ratio = static_cast<double>(inter) / static_cast<double>(uni);
      return 2.0 - 2.0 * std::pow(ratio, f.order());
    }
  }
  return kInfinity;
}

double delta(const CostFn& f, const Clade& a, Gap) {
  switch (f.kind()) {
    case CostFn::Kind::SymDiff: return static_cast<double>(a.size());
    case CostFn::Kind::RfDelta:
    case CostFn::Kind::Jaccard: return 1.0;
  }
  return 1.0;
}

double delta(const CostFn& f, Gap, const Clade& b) { return delta(f, b, gap); }

double delta(const CostFn&, Gap, Gap) {
  throw Error(ErrorCode::BothGaps, "delta is undefined for two gaps");
}

double weight(const CostFn& f, const Clade& a, const Clade& b) {
  switch (f.kind()) {
    case CostFn::Kind::RfDelta:
      return a == b ? 2.0 : 0.0;
    case CostFn::Kind::SymDiff:
      // |a| + |b| - |a ^ b|
      return 2.0 * static_cast<double>(a.intersection_size(b));
    case CostFn::Kind::Jaccard: {
      // 2 * J^k directly; 2 - delta would cancel for tiny J^k
      const auto uni = a.union_size(b);
      if (uni == 0) return 2.0;
      const double ratio =
          static_cast<double>(a.intersection_size(b)) / static_cast<double>(uni);
      return 2.0 * std::pow(ratio, f.order());
    }
  }
  return 0.0;
}

double empty_matching_cost(const CostFn& f, const CladeSet& c1, const CladeSet& c2) {
  double total = 0.0;
  for (const auto& c : c1.clades) total += delta(f, c, gap);
  for (const auto& c : c2.clades) total += delta(f, gap, c);
  return total;
}

double matching_cost(const CostFn& f, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                     const CladeSet& c1, const CladeSet& c2) {
  std::vector<char> used1(c1.size(), 0), used2(c2.size(), 0);
  double total = 0.0;
  for (const auto& [i, j] : pairs) {
    if (i >= c1.size() || j >= c2.size())
      throw Error(ErrorCode::InvalidMatching, "pair index out of range");
    if (used1[i] || used2[j]) throw Error(ErrorCode::InvalidMatching, "clade matched twice");
    used1[i] = used2[j] = 1;
    total += delta(f, c1[i], c2[j]);
  }
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (!used1[i]) total += delta(f, c1[i], gap);
  for (std::size_t j = 0; j < c2.size(); ++j)
    if (!used2[j]) total += delta(f, gap, c2[j]);
  return total;
}

}  // namespace grf
