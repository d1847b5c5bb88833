#include "random_trees.hpp"

#include "grf/newick.hpp"

namespace grf::testing {

std::shared_ptr<const Taxa> make_taxa(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return std::make_shared<const Taxa>(Taxa::natural_order(std::move(names)));
}

Tree random_tree(const std::shared_ptr<const Taxa>& taxa, std::mt19937_64& rng, double contract) {
  std::vector<Tree::RawNode> nodes;
  std::vector<std::size_t> roots;
  for (std::size_t t = 0; t < taxa->size(); ++t) {
    nodes.push_back({{}, t});
    roots.push_back(nodes.size() - 1);
  }
  std::vector<char> dead;
  std::bernoulli_distribution merge(contract);
  while (roots.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    const auto a = pick(rng);
    std::swap(roots[a], roots.back());
    const auto x = roots.back();
    roots.pop_back();
    std::uniform_int_distribution<std::size_t> pick2(0, roots.size() - 1);
    const auto b = pick2(rng);
    const auto y = roots[b];

    Tree::RawNode joined;
    for (auto child : {x, y}) {
      // splice an internal child's children in to contract the edge
      if (!nodes[child].taxon && merge(rng)) {
        joined.children.insert(joined.children.end(), nodes[child].children.begin(),
                               nodes[child].children.end());
        dead.resize(nodes.size(), 0);
        dead[child] = 1;
      } else
        joined.children.push_back(child);
    }
    nodes.push_back(std::move(joined));
    roots[b] = nodes.size() - 1;
  }
  dead.resize(nodes.size(), 0);
  std::vector<std::size_t> remap(nodes.size());
  std::vector<Tree::RawNode> live;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!dead[i]) {
      remap[i] = live.size();
      live.push_back(nodes[i]);
    }
  for (auto& n : live)
    for (auto& c : n.children) c = remap[c];
  return Tree(taxa, live, remap[roots.front()]);
}

Tree random_binary_tree(const std::shared_ptr<const Taxa>& taxa, std::mt19937_64& rng) {
  return random_tree(taxa, rng, 0.0);
}

std::pair<Tree, Tree> parse_pair(const std::string& a, const std::string& b) {
  auto doc = newick::parse(a + "\n" + b + "\n");
  return {std::move(doc.trees.at(0)), std::move(doc.trees.at(1))};
}

std::pair<Tree, Tree> caterpillar_fixture() { return parse_pair(kFixtureT1, kFixtureT2); }

}  // namespace grf::testing

#include "grf/error.hpp"

namespace grf::testing {

std::string mutate(const std::string& text, std::mt19937_64& rng) {
  static const std::string alphabet = "(),;:'[] \t\r\nABCtz019.-_|e+#\"";
  std::string s = text;
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits; ++e) {
    const auto pos = s.empty() ? 0 : rng() % (s.size() + 1);
    auto random_char = [&] {
      return rng() % 5 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    };
    switch (rng() % 4) {
      case 0:
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), random_char());
        break;
      case 1:
        if (pos < s.size()) s.erase(pos, 1 + rng() % 3);
        break;
      case 2:
        if (pos < s.size()) s[pos] = random_char();
        break;
      default:
        if (pos < s.size()) s.insert(pos, s.substr(pos, 1 + rng() % 6));
        break;
    }
  }
  return s;
}

bool is_parse_error_code(int code) {
  switch (static_cast<ErrorCode>(code)) {
    case ErrorCode::UnbalancedParens:
    case ErrorCode::EmptyLabel:
    case ErrorCode::DuplicateTaxon:
    case ErrorCode::TaxaMismatch:
    case ErrorCode::TrailingGarbage:
    case ErrorCode::MissingSemicolon:
    case ErrorCode::MalformedNumber:
    case ErrorCode::UnterminatedQuote:
    case ErrorCode::UnexpectedCharacter:
    case ErrorCode::EmptyInput:
      return true;
    default:
      return false;
  }
}

}  // namespace grf::testing
