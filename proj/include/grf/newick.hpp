#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grf/model.hpp"

namespace grf::newick {

/// One or more trees read from a single Newick text, all over one universe.
struct Document {
  std::string source;
  std::shared_ptr<const Taxa> taxa;
  std::vector<Tree> trees;
};

/// Parses semicolon-terminated Newick trees. Branch lengths, internal node
/// labels and [bracket comments] are accepted and discarded. The taxa
/// universe is the natural-order sort of the leaf labels; every tree in the
/// text must carry the same label set. Throws grf::Error on malformed input.
Document parse(std::string_view text);

Document parse_file(const std::filesystem::path& path);

/// Canonical Newick: children ordered by their smallest taxon index, no
/// branch lengths, labels quoted only when needed.
std::string serialize(const Tree& tree);

/// Label as it would appear in serialized output.
std::string format_label(std::string_view label);

}  // namespace grf::newick
