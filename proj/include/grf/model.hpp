#pragma once

// Core domain types: the taxa universe, rooted trees, clades as fixed-width
// bitsets, clade extraction and the arboreal conflict predicate.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace grf {

/// Ordered universe of unique, non-empty taxon labels.
class Taxa {
 public:
  Taxa() = default;
  explicit Taxa(std::vector<std::string> names);

  /// Builds a universe with labels sorted in natural order (digit runs compare
  /// numerically, so "2" < "10").
  static Taxa natural_order(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Taxa& a, const Taxa& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool natural_less(std::string_view a, std::string_view b);

/// Subset of taxa stored as 64-bit blocks sized from the universe.
class Clade {
 public:
  Clade() = default;
  explicit Clade(std::size_t universe_size);
  Clade(std::size_t universe_size, std::initializer_list<std::size_t> members);

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept;  // popcount
  bool empty() const noexcept;
  bool contains(std::size_t taxon) const;
  void insert(std::size_t taxon);
  Clade& operator|=(const Clade& other);

  bool is_subset_of(const Clade& other) const;
  bool intersects(const Clade& other) const;
  std::size_t intersection_size(const Clade& other) const;
  std::size_t union_size(const Clade& other) const;
  std::size_t symmetric_difference_size(const Clade& other) const;

  /// Trivial clades are singletons and the full universe.
  bool trivial() const noexcept;

  std::vector<std::size_t> members() const;
  std::size_t first_member() const;  // universe_size() when empty
  std::size_t hash() const noexcept;

  friend bool operator==(const Clade& a, const Clade& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical clade order: popcount ascending, then by member lists compared
/// lexicographically (the set holding the smallest differing taxon first).
bool canonical_less(const Clade& a, const Clade& b);

struct CladeHash {
  std::size_t operator()(const Clade& c) const noexcept { return c.hash(); }
};

/// How two clades of one universe relate as sets.
enum class Relation : std::uint8_t { Equal, Subset, Superset, Disjoint, Overlap };

Relation relate(const Clade& a, const Clade& b);

/// Two matched pairs conflict unless their relations are nested the same way
/// on both sides or disjoint on both sides. `first` relates the two tree-1
/// clades, `second` the two tree-2 clades.
constexpr bool conflict(Relation first, Relation second) noexcept {
  const bool down1 = first == Relation::Equal || first == Relation::Subset;
  const bool down2 = second == Relation::Equal || second == Relation::Subset;
  const bool up1 = first == Relation::Equal || first == Relation::Superset;
  const bool up2 = second == Relation::Equal || second == Relation::Superset;
  const bool apart = first == Relation::Disjoint && second == Relation::Disjoint;
  return !((down1 && down2) || (up1 && up2) || apart);
}

/// Pair form: (a1, a2) and (b1, b2) are matched pairs, index 1 from tree 1.
inline bool conflict(const Clade& a1, const Clade& a2, const Clade& b1, const Clade& b2) {
  return conflict(relate(a1, b1), relate(a2, b2));
}

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Rooted phylogenetic tree over a shared taxa universe. Immutable; unary
/// internal nodes are collapsed on construction.
class Tree {
 public:
  struct Node {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    std::optional<std::size_t> taxon;  // set on leaves only
  };

  /// Construction input: children by index into the same vector.
  struct RawNode {
    std::vector<std::size_t> children;
    std::optional<std::size_t> taxon;
  };

  Tree(std::shared_ptr<const Taxa> taxa, const std::vector<RawNode>& nodes, std::size_t root);

  const Taxa& taxa() const noexcept { return *taxa_; }
  const std::shared_ptr<const Taxa>& shared_taxa() const noexcept { return taxa_; }

  NodeId root() const noexcept { return 0; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  bool is_leaf(NodeId id) const { return nodes_.at(id).children.empty(); }
  const Clade& clade_below(NodeId id) const { return below_.at(id); }

 private:
  std::shared_ptr<const Taxa> taxa_;
  std::vector<Node> nodes_;  // preorder, root at 0
  std::vector<Clade> below_;
};

/// The non-trivial clades of one tree in canonical order.
struct CladeSet {
  std::shared_ptr<const Taxa> taxa;
  std::vector<Clade> clades;
  std::vector<NodeId> origin;  // node of the source tree per clade

  std::size_t size() const noexcept { return clades.size(); }
  bool empty() const noexcept { return clades.empty(); }
  const Clade& operator[](std::size_t i) const { return clades[i]; }
};

CladeSet extract_clades(const Tree& tree);

/// True when both universes hold the same labels in the same order.
bool same_taxa(const Taxa& a, const Taxa& b);

/// Throws TaxaMismatch unless the two clade sets share one universe.
void require_same_taxa(const CladeSet& a, const CladeSet& b);
void require_same_taxa(const Tree& a, const Tree& b);

}  // namespace grf
