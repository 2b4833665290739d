#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parsicompact/charmatrix.hpp"

namespace parsicompact {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Unrooted tree whose nodes may carry a species label. Nodes live in an arena
// addressed by NodeId; removed slots go on a free list and are handed out
// again (last freed, first reused), so applying an edit and then its inverse
// restores the same ids.
class MixedTree {
 public:
  MixedTree() = default;

  // Single labelled node.
  static MixedTree singleton(SpeciesId species);

  NodeId add_node(std::optional<SpeciesId> label = std::nullopt);
  // Node must be isolated.
  void remove_node(NodeId u);
  void connect(NodeId u, NodeId v);
  void disconnect(NodeId u, NodeId v);
  // Puts a new unlabelled node w in the middle of edge (u,v) and returns it.
  // w takes v's slot in u's neighbour list and u's slot in v's, so
  // unsubdivide(w) restores the exact neighbour order.
  NodeId subdivide(Edge e);
  // Inverse of subdivide: w must have degree 2 and is removed.
  void unsubdivide(NodeId w);

  void set_label(NodeId u, SpeciesId species);
  void clear_label(NodeId u);

  std::size_t capacity() const { return adj_.size(); }
  bool alive(NodeId u) const { return u < alive_.size() && alive_[u]; }
  std::size_t node_count() const { return live_; }
  std::size_t edge_count() const { return live_ == 0 ? 0 : edges_; }
  std::size_t labelled_count() const { return labelled_; }
  std::size_t unlabelled_count() const { return live_ - labelled_; }

  std::span<const NodeId> neighbors(NodeId u) const { return adj_[u]; }
  std::size_t degree(NodeId u) const { return adj_[u].size(); }
  bool has_edge(NodeId u, NodeId v) const;

  bool is_labelled(NodeId u) const { return label_[u] >= 0; }
  std::optional<SpeciesId> label(NodeId u) const {
    if (label_[u] < 0) return std::nullopt;
    return static_cast<SpeciesId>(label_[u]);
  }
  // Precondition: is_labelled(u).
  SpeciesId species(NodeId u) const { return static_cast<SpeciesId>(label_[u]); }
  std::optional<NodeId> node_of(SpeciesId species) const;

  std::vector<NodeId> nodes() const;
  std::vector<Edge> edges() const;
  NodeId first_node() const;

  // Checks connectivity, acyclicity, labelled leaves and unique labels.
  // Returns an empty string when valid, otherwise a description of the problem.
  std::string validate() const;
  // No unlabelled node of degree below 3.
  bool is_compact() const;

 private:
  void replace_neighbor(NodeId u, NodeId from, NodeId to);

  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::int32_t> label_;
  std::vector<char> alive_;
  std::vector<NodeId> free_;
  std::vector<NodeId> species_node_;
  std::size_t live_ = 0;
  std::size_t edges_ = 0;
  std::size_t labelled_ = 0;
};

// Orientation of a tree away from a chosen root.
class RootedView {
 public:
  RootedView(const MixedTree& tree, NodeId root);

  const MixedTree& tree() const { return *tree_; }
  NodeId root() const { return root_; }
  NodeId parent(NodeId u) const { return parent_[u]; }
  // Nodes in depth-first preorder; parents precede children.
  std::span<const NodeId> preorder() const { return order_; }
  std::size_t child_count(NodeId u) const { return tree_->degree(u) - (u == root_ ? 0 : 1); }

 private:
  const MixedTree* tree_;
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> order_;
};

// ---- The four ways of adding species s to a tree. In-place forms return what
// is needed to revert them; grow_rule_N are the value-returning forms.

struct JunctionInsert {
  NodeId junction;
  NodeId leaf;
};

// Rule 1: split edge (u,v) with a new unlabelled node carrying a new leaf s.
JunctionInsert insert_junction_leaf(MixedTree& tree, Edge edge, SpeciesId s);
void revert_junction_leaf(MixedTree& tree, Edge edge, JunctionInsert inserted);

// Rule 2: split edge (u,v) with a labelled node s.
NodeId insert_on_edge(MixedTree& tree, Edge edge, SpeciesId s);
void revert_insert_on_edge(MixedTree& tree, Edge edge, NodeId inserted);

// Rule 3: hang a new leaf s off node u.
NodeId attach_leaf(MixedTree& tree, NodeId u, SpeciesId s);
void revert_attach_leaf(MixedTree& tree, NodeId leaf);

// Rule 4: label the unlabelled node u with s.
void label_node(MixedTree& tree, NodeId u, SpeciesId s);
void revert_label_node(MixedTree& tree, NodeId u);

MixedTree grow_rule_1(const MixedTree& tree, Edge edge, SpeciesId s);
MixedTree grow_rule_2(const MixedTree& tree, Edge edge, SpeciesId s);
MixedTree grow_rule_3(const MixedTree& tree, NodeId u, SpeciesId s);
MixedTree grow_rule_4(const MixedTree& tree, NodeId u, SpeciesId s);

// ---- Topology edits used to move between mixed and cubic trees.

// New unlabelled node adopts two of u's neighbours and attaches to u.
// Returns the new node. Requires degree(u) >= 4.
NodeId split_node_in_place(MixedTree& tree, NodeId u, std::pair<NodeId, NodeId> moved);
MixedTree split_node(const MixedTree& tree, NodeId u, std::pair<NodeId, NodeId> moved);

// Merges v into u. The merged node keeps id u and inherits the label of
// whichever endpoint had one. Both endpoints labelled is an error.
NodeId contract_in_place(MixedTree& tree, Edge edge);
MixedTree contract_edge(const MixedTree& tree, Edge edge);

// Moves the label of internal node u onto a new leaf hanging from a new
// unlabelled node spliced into u's first incident edge. Returns the leaf.
NodeId move_label_to_leaf_in_place(MixedTree& tree, NodeId u);
MixedTree move_internal_label_to_leaf(const MixedTree& tree, NodeId u);
// Applies the move to every labelled internal node.
MixedTree labels_to_leaves(const MixedTree& tree);

// Prunes unlabelled leaves and splices out unlabelled degree-2 nodes until
// none remain.
void suppress_in_place(MixedTree& tree);
MixedTree suppress_degree2_unlabelled(const MixedTree& tree);

// Builds a tree from an edge list over nodes 0..labels.size()-1.
MixedTree tree_from_edges(const std::vector<std::optional<SpeciesId>>& labels,
                          const std::vector<std::pair<NodeId, NodeId>>& edges);

}  // namespace parsicompact
