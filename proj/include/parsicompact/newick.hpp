#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "parsicompact/charmatrix.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

// Reads Newick where any node, internal or leaf, may carry a species name.
// Names are resolved against `names` (index = SpeciesId). Branch lengths and
// [comments] are accepted and discarded. Unnamed leaves are rejected. An
// unnamed root with two children is dropped, so "((A,B),(C,D));" reads as the
// unrooted quartet.
MixedTree parse_newick(std::string_view text, std::span<const std::string> names);
MixedTree parse_newick(std::string_view text, const CharacterMatrix& matrix);

// Writes the tree hanging from `root`, children in neighbour order.
std::string write_newick(const MixedTree& tree, std::span<const std::string> names, NodeId root);
// Writes from the canonical root with canonically ordered children, so every
// isomorphic copy produces identical text.
std::string write_newick(const MixedTree& tree, std::span<const std::string> names);
std::string write_newick(const MixedTree& tree, const CharacterMatrix& matrix);

}  // namespace parsicompact
