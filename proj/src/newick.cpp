#include "grf/newick.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "grf/error.hpp"

namespace grf::newick {
namespace {

bool is_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '|' || c == '-';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_number_char(char c) {
  return (c >= '0' && c <= '9') || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-';
}

// Tree as written, before labels are mapped onto a universe.
struct ParsedTree {
  struct Node {
    std::vector<std::size_t> children;
    std::optional<std::string> label;  // leaves only
  };
  std::vector<Node> nodes;
  std::size_t root = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<ParsedTree> parse_all() {
    std::vector<ParsedTree> trees;
    skip_blank();
    while (!at_end()) {
      trees.push_back(parse_tree());
      skip_blank();
    }
    if (trees.empty()) fail(ErrorCode::EmptyInput, "no tree found");
    return trees;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw Error(code, msg + " at offset " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_blank() {
    while (!at_end()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail(ErrorCode::UnterminatedQuote, "unterminated comment");
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  // Returns nullopt when no label starts here.
  std::optional<std::string> read_label() {
    if (at_end()) return std::nullopt;
    if (peek() == '\'') {
      ++pos_;
      std::string out;
      for (;;) {
        if (at_end()) fail(ErrorCode::UnterminatedQuote, "unterminated quoted label");
        const char c = text_[pos_++];
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            out.push_back('\'');
            ++pos_;
          } else {
            return out;
          }
        } else {
          out.push_back(c);
        }
      }
    }
    const auto start = pos_;
    while (!at_end() && is_label_char(peek())) ++pos_;
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  void read_branch_length() {
    skip_blank();
    if (at_end() || peek() != ':') return;
    ++pos_;
    skip_blank();
    const auto start = pos_;
    while (!at_end() && is_number_char(peek())) ++pos_;
    double value = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (start == pos_ || ec != std::errc() || ptr != last)
      fail(ErrorCode::MalformedNumber, "bad branch length");
  }

  // Label and length after a closed internal node or a leaf label.
  void read_annotations(bool internal) {
    if (internal) {
      skip_blank();
      read_label();
    }
    read_branch_length();
  }

  ParsedTree parse_tree() {
    ParsedTree tree;
    std::vector<std::size_t> open;  // stack of unclosed internal nodes

    auto add_node = [&](ParsedTree::Node node) {
      tree.nodes.push_back(std::move(node));
      const auto id = tree.nodes.size() - 1;
      if (!open.empty()) tree.nodes[open.back()].children.push_back(id);
      return id;
    };

    for (;;) {
      // expecting the start of a subtree
      skip_blank();
      if (at_end()) {
        if (!open.empty()) fail(ErrorCode::UnbalancedParens, "input ends inside a subtree");
        fail(ErrorCode::EmptyLabel, "expected a subtree");
      }
      if (peek() == '(') {
        ++pos_;
        open.push_back(add_node({}));
        continue;
      }
      if (peek() == ',' || peek() == ')' || peek() == ';' || peek() == ':')
        fail(ErrorCode::EmptyLabel, "leaf without a label");
      auto label = read_label();
      if (!label) fail(ErrorCode::UnexpectedCharacter, "character cannot start a label");
      if (label->empty()) fail(ErrorCode::EmptyLabel, "empty quoted leaf label");
      add_node({{}, std::move(label)});
      read_annotations(false);

      // after a complete subtree: close as many parens as are written
      for (;;) {
        skip_blank();
        if (at_end()) {
          if (!open.empty()) fail(ErrorCode::UnbalancedParens, "missing ')'");
          fail(ErrorCode::MissingSemicolon, "tree is not terminated by ';'");
        }
        const char c = peek();
        if (c == ',') {
          if (open.empty()) fail(ErrorCode::UnbalancedParens, "',' outside parentheses");
          ++pos_;
          break;  // next sibling
        }
        if (c == ')') {
          if (open.empty()) fail(ErrorCode::UnbalancedParens, "unmatched ')'");
          ++pos_;
          open.pop_back();
          read_annotations(true);
          continue;
        }
        if (c == ';') {
          if (!open.empty()) fail(ErrorCode::UnbalancedParens, "missing ')' before ';'");
          ++pos_;
          return tree;
        }
        fail(ErrorCode::TrailingGarbage, "unexpected text after subtree");
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Tree build_tree(const ParsedTree& parsed, const std::shared_ptr<const Taxa>& taxa) {
  std::vector<Tree::RawNode> raw(parsed.nodes.size());
  for (std::size_t i = 0; i < parsed.nodes.size(); ++i) {
    raw[i].children = parsed.nodes[i].children;
    if (parsed.nodes[i].label) raw[i].taxon = taxa->find(*parsed.nodes[i].label);
  }
  return Tree(taxa, raw, parsed.root);
}

std::vector<std::string> leaf_labels(const ParsedTree& tree) {
  std::vector<std::string> labels;
  std::unordered_set<std::string_view> seen;
  for (const auto& n : tree.nodes) {
    if (!n.label) continue;
    if (!seen.insert(*n.label).second)
      throw Error(ErrorCode::DuplicateTaxon, "taxon '" + *n.label + "' appears twice in one tree");
    labels.push_back(*n.label);
  }
  return labels;
}

}  // namespace

Document parse(std::string_view text) {
  Document doc;
  doc.source = std::string(text);
  const auto parsed = Parser(text).parse_all();

  auto first = leaf_labels(parsed.front());
  auto taxa = std::make_shared<const Taxa>(Taxa::natural_order(first));
  for (std::size_t t = 1; t < parsed.size(); ++t) {
    const auto labels = leaf_labels(parsed[t]);
    const bool same = labels.size() == taxa->size() &&
                      std::all_of(labels.begin(), labels.end(),
                                  [&](const std::string& l) { return taxa->find(l).has_value(); });
    if (!same)
      throw Error(ErrorCode::TaxaMismatch,
                  "tree " + std::to_string(t) + " has a different leaf set than tree 0");
  }

  doc.trees.reserve(parsed.size());
  for (const auto& p : parsed) doc.trees.push_back(build_tree(p, taxa));
  doc.taxa = std::move(taxa);
  return doc;
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string format_label(std::string_view label) {
  if (!label.empty() && std::all_of(label.begin(), label.end(), is_label_char))
    return std::string(label);
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

std::string serialize(const Tree& tree) {
  std::string out;
  // explicit stack: entries are nodes to open, or a pending ',' / ')'
  struct Item {
    enum Kind { Open, Comma, Close } kind;
    NodeId node;
  };
  std::vector<Item> stack{{Item::Open, tree.root()}};
  while (!stack.empty()) {
    const auto item = stack.back();
    stack.pop_back();
    if (item.kind == Item::Comma) {
      out.push_back(',');
      continue;
    }
    if (item.kind == Item::Close) {
      out.push_back(')');
      continue;
    }
    const auto& node = tree.node(item.node);
    if (node.taxon) {
      out += format_label(tree.taxa().name(*node.taxon));
      continue;
    }
    auto children = node.children;
    std::sort(children.begin(), children.end(), [&](NodeId a, NodeId b) {
      return tree.clade_below(a).first_member() < tree.clade_below(b).first_member();
    });
    out.push_back('(');
    stack.push_back({Item::Close, item.node});
    for (std::size_t i = children.size(); i-- > 0;) {
      stack.push_back({Item::Open, children[i]});
      if (i > 0) stack.push_back({Item::Comma, item.node});
    }
  }
  out.push_back(';');
  return out;
}

}  // namespace grf::newick
