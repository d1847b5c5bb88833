#include "grf/model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "grf/error.hpp"

namespace grf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::DuplicateTaxon: return "DuplicateTaxon";
    case ErrorCode::TaxaMismatch: return "TaxaMismatch";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::MissingSemicolon: return "MissingSemicolon";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::UnterminatedQuote: return "UnterminatedQuote";
    case ErrorCode::UnexpectedCharacter: return "UnexpectedCharacter";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::BothGaps: return "BothGaps";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Taxa

Taxa::Taxa(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorCode::EmptyLabel, "taxon label is empty");
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorCode::DuplicateTaxon, "taxon '" + names_[i] + "' appears twice");
  }
}

Taxa Taxa::natural_order(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return Taxa(std::move(names));
}

std::optional<std::size_t> Taxa::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      // compare digit runs by value: strip leading zeros, then length, then text
      std::size_t iz = i, jz = j;
      while (iz + 1 < ie && a[iz] == '0') ++iz;
      while (jz + 1 < je && b[jz] == '0') ++jz;
      const auto ra = a.substr(iz, ie - iz);
      const auto rb = b.substr(jz, je - jz);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  // equal by value: fall back to bytes so the order stays strict ("01" vs "1")
  return a < b;
}

// ---------------------------------------------------------------------------
// Clade

Clade::Clade(std::size_t universe_size)
    : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

Clade::Clade(std::size_t universe_size, std::initializer_list<std::size_t> members)
    : Clade(universe_size) {
  for (auto m : members) insert(m);
}

std::size_t Clade::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Clade::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool Clade::contains(std::size_t taxon) const {
  if (taxon >= universe_) return false;
  return (words_[taxon / 64] >> (taxon % 64)) & 1U;
}

void Clade::insert(std::size_t taxon) {
  if (taxon >= universe_) throw Error(ErrorCode::InvalidArgument, "taxon index out of range");
  words_[taxon / 64] |= std::uint64_t{1} << (taxon % 64);
}

Clade& Clade::operator|=(const Clade& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool Clade::is_subset_of(const Clade& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Clade::intersects(const Clade& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t Clade::intersection_size(const Clade& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return n;
}

std::size_t Clade::union_size(const Clade& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] | other.words_[i]));
  return n;
}

std::size_t Clade::symmetric_difference_size(const Clade& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  return n;
}

bool Clade::trivial() const noexcept {
  const auto n = size();
  return n == 1 || n == universe_;
}

std::vector<std::size_t> Clade::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Clade::first_member() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

std::size_t Clade::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const Clade& a, const Clade& b) {
  const auto na = a.size(), nb = b.size();
  if (na != nb) return na < nb;
  // first differing taxon decides; whoever holds it sorts first
  const auto ma = a.members(), mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Relation relate(const Clade& a, const Clade& b) {
  const bool sub = a.is_subset_of(b);
  const bool sup = b.is_subset_of(a);
  if (sub && sup) return Relation::Equal;
  if (sub) return Relation::Subset;
  if (sup) return Relation::Superset;
  if (!a.intersects(b)) return Relation::Disjoint;
  return Relation::Overlap;
}

// ---------------------------------------------------------------------------
// Tree

Tree::Tree(std::shared_ptr<const Taxa> taxa, const std::vector<RawNode>& raw, std::size_t root)
    : taxa_(std::move(taxa)) {
  if (!taxa_) throw Error(ErrorCode::InvalidTree, "tree has no taxa universe");
  if (root >= raw.size()) throw Error(ErrorCode::InvalidTree, "root index out of range");

  for (const auto& n : raw) {
    if (n.taxon && !n.children.empty())
      throw Error(ErrorCode::InvalidTree, "labelled leaf has children");
    if (!n.taxon && n.children.empty())
      throw Error(ErrorCode::InvalidTree, "unlabelled leaf");
    if (n.taxon && *n.taxon >= taxa_->size())
      throw Error(ErrorCode::InvalidTree, "leaf taxon out of range");
    for (auto c : n.children)
      if (c >= raw.size()) throw Error(ErrorCode::InvalidTree, "child index out of range");
  }

  std::vector<char> visited(raw.size(), 0);
  std::vector<char> taxon_seen(taxa_->size(), 0);
  std::size_t visited_count = 0;

  // iterative preorder copy; deep caterpillars must not blow the stack
  struct Frame {
    std::size_t raw_id;
    NodeId parent;
  };
  std::vector<Frame> stack{{root, kNoNode}};
  while (!stack.empty()) {
    const auto [start, parent] = stack.back();
    stack.pop_back();

    // mark the whole unary chain as visited
    std::size_t id = start;
    for (;;) {
      if (visited[id]) throw Error(ErrorCode::InvalidTree, "node reachable twice (not a tree)");
      visited[id] = 1;
      ++visited_count;
      if (raw[id].taxon || raw[id].children.size() != 1) break;
      id = raw[id].children.front();
    }

    const auto self = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{parent, {}, raw[id].taxon});
    if (parent != kNoNode) nodes_[parent].children.push_back(self);

    if (raw[id].taxon) {
      const auto t = *raw[id].taxon;
      if (taxon_seen[t])
        throw Error(ErrorCode::DuplicateTaxon, "taxon '" + taxa_->name(t) + "' appears twice");
      taxon_seen[t] = 1;
    }
    // reverse push keeps children in input order in the preorder arena
    for (auto it = raw[id].children.rbegin(); it != raw[id].children.rend(); ++it)
      stack.push_back({*it, self});
  }

  if (visited_count != raw.size())
    throw Error(ErrorCode::InvalidTree, "nodes unreachable from the root");
  for (std::size_t t = 0; t < taxon_seen.size(); ++t)
    if (!taxon_seen[t])
      throw Error(ErrorCode::TaxaMismatch, "taxon '" + taxa_->name(t) + "' missing from tree");

  below_.assign(nodes_.size(), Clade(taxa_->size()));
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (nodes_[i].taxon) below_[i].insert(*nodes_[i].taxon);
    if (nodes_[i].parent != kNoNode) below_[nodes_[i].parent] |= below_[i];
  }
}

CladeSet extract_clades(const Tree& tree) {
  std::vector<std::pair<Clade, NodeId>> found;
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    if (tree.is_leaf(id)) continue;
    const auto& c = tree.clade_below(id);
    if (!c.trivial()) found.emplace_back(c, id);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

  CladeSet out;
  out.taxa = tree.shared_taxa();
  out.clades.reserve(found.size());
  out.origin.reserve(found.size());
  for (auto& [c, id] : found) {
    out.clades.push_back(std::move(c));
    out.origin.push_back(id);
  }
  return out;
}

bool same_taxa(const Taxa& a, const Taxa& b) { return &a == &b || a == b; }

void require_same_taxa(const CladeSet& a, const CladeSet& b) {
  if (!a.taxa || !b.taxa || !same_taxa(*a.taxa, *b.taxa))
    throw Error(ErrorCode::TaxaMismatch, "clade sets are over different taxa");
}

void require_same_taxa(const Tree& a, const Tree& b) {
  if (!same_taxa(a.taxa(), b.taxa()))
    throw Error(ErrorCode::TaxaMismatch, "trees are over different taxa");
}

}  // namespace grf
