#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "parsicompact/charmatrix.hpp"
#include "parsicompact/state_set.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

// One StateSet per (node, character), rows indexed by NodeId.
class SetTable {
 public:
  SetTable() = default;
  SetTable(std::size_t nodes, std::size_t m) : m_(m), data_(nodes * m) {}

  void reset(std::size_t nodes, std::size_t m) {
    m_ = m;
    data_.assign(nodes * m, StateSet{});
  }
  std::size_t m() const { return m_; }
  std::size_t rows() const { return m_ == 0 ? 0 : data_.size() / m_; }

  std::span<StateSet> row(NodeId u) { return {data_.data() + std::size_t{u} * m_, m_}; }
  std::span<const StateSet> row(NodeId u) const { return {data_.data() + std::size_t{u} * m_, m_}; }
  StateSet& at(NodeId u, std::size_t i) { return data_[std::size_t{u} * m_ + i]; }
  StateSet at(NodeId u, std::size_t i) const { return data_[std::size_t{u} * m_ + i]; }

  friend bool operator==(const SetTable&, const SetTable&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<StateSet> data_;
};

// Hartigan sets of one node: upper (VU), lower (VL) and root (VV) tuples.
struct NodeSets {
  std::span<const StateSet> upper;
  std::span<const StateSet> lower;
  std::span<const StateSet> root;
};

struct ScoreResult {
  int mp_cost = 0;
  NodeId root = kNoNode;
  SetTable upper;
  SetTable lower;
  SetTable root_sets;

  NodeSets node_sets(NodeId u) const { return {upper.row(u), lower.row(u), root_sets.row(u)}; }
};

struct BottomUpResult {
  int mp_cost = 0;
  SetTable upper;
  SetTable lower;
};

// Fitch's intersection-or-union pass. Only defined for rooted trees where
// every internal node has exactly two children and only leaves are labelled.
// The per-node Fitch sets are returned in both `upper` and `root_sets`.
ScoreResult fitch_score(const RootedView& view, const CharacterMatrix& matrix);

// Hartigan's bottom-up pass for a rooted multifurcating tree. A labelled node
// is pinned to its species' state: its upper set is that singleton, its lower
// set is empty, and each child whose upper set misses the state costs one.
BottomUpResult hartigan_bottom_up(const RootedView& view, const CharacterMatrix& matrix);

// Hartigan's top-down pass: root sets of every node.
SetTable hartigan_top_down(const RootedView& view, const BottomUpResult& bottom_up);

// Both passes from a given root.
ScoreResult score_rooted(const RootedView& view, const CharacterMatrix& matrix);

// Root used for unrooted scoring: the lowest-numbered unlabelled node of
// degree >= 2 if there is one, otherwise the lowest-numbered node.
NodeId default_root(const MixedTree& tree);

// MP-cost and root sets of an unrooted tree. Leaf-labelled and mixed trees
// take the same path; labelled internal nodes are constrained to their value.
ScoreResult score_unrooted(const MixedTree& tree, const CharacterMatrix& matrix);
ScoreResult score_mixed_constrained(const MixedTree& tree, const CharacterMatrix& matrix);

// MP-cost only (bottom-up pass).
int mp_cost(const MixedTree& tree, const CharacterMatrix& matrix);

// Number of characters whose root sets are disjoint: the least number of
// mutations any best fit places on an edge between the two nodes.
int min_cost_edge(std::span<const StateSet> u_root, std::span<const StateSet> v_root);
int min_cost_edge(const NodeSets& u, const NodeSets& v);

// One state per character for every live node (rows of dead arena slots are empty).
struct FitAssignment {
  std::vector<std::vector<StateIndex>> states;
  int total_cost = 0;
};

// A best fit read off the root sets: the root takes its lowest root-set state,
// every other node keeps its parent's state when that is in its upper set and
// otherwise takes its lowest upper-set state.
FitAssignment extract_fit(const MixedTree& tree, const ScoreResult& score, const CharacterMatrix& matrix);

// Mutations along all edges for a given assignment.
int fit_cost(const MixedTree& tree, const FitAssignment& fit);

}  // namespace parsicompact
