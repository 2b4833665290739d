#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "parsicompact/charmatrix.hpp"
#include "parsicompact/parsimony.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

// Hartigan sets for every rooting at once. For each ordered pair (x, p) of
// adjacent nodes it stores the upper set, lower set and cost of the part of
// the tree on x's side of the edge, rooted at x. The root set of a node is the
// combination of all subtrees pointing at it, which equals the root set the
// two-pass algorithm gives for that node under any rooting.
class DirectedSets {
 public:
  static constexpr std::size_t kNoSlot = std::numeric_limits<std::size_t>::max();

  DirectedSets() = default;
  DirectedSets(const MixedTree& tree, const CharacterMatrix& matrix);

  // Sets of `after`, which is the tree `before` was computed on with the edge
  // (merged, removed) contracted into `merged`. Subtrees pointing towards the
  // merged node are copied; everything pointing away from it is recomputed.
  static DirectedSets after_contraction(const DirectedSets& before, const MixedTree& after, NodeId merged,
                                        NodeId removed, const CharacterMatrix& matrix);

  std::size_t m() const { return m_; }
  int tree_cost() const { return tree_cost_; }

  // Slot of the subtree at x seen from neighbour p, or kNoSlot if not adjacent.
  std::size_t slot(NodeId x, NodeId p) const;
  std::span<const StateSet> upper(std::size_t slot) const { return {upper_.data() + slot * m_, m_}; }
  std::span<const StateSet> lower(std::size_t slot) const { return {lower_.data() + slot * m_, m_}; }
  int cost(std::size_t slot) const { return cost_[slot]; }

  std::span<const StateSet> root_set(NodeId x) const { return root_.row(x); }
  const SetTable& root_sets() const { return root_; }

 private:
  void layout(const MixedTree& tree, std::size_t m);
  void combine(const MixedTree& tree, const CharacterMatrix& matrix, NodeId p, NodeId excluded, StateSet* upper,
               StateSet* lower, int& cost);
  void outward(const MixedTree& tree, const CharacterMatrix& matrix, NodeId root);

  std::size_t m_ = 0;
  int tree_cost_ = 0;
  std::vector<std::size_t> base_;
  std::vector<NodeId> nbr_;
  std::vector<StateSet> upper_;
  std::vector<StateSet> lower_;
  std::vector<int> cost_;
  SetTable root_;
  std::vector<StateSet> scratch_;
};

}  // namespace parsicompact
