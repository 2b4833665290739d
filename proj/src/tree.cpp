#include "parsicompact/tree.hpp"

#include <algorithm>

#include "parsicompact/error.hpp"

namespace parsicompact {

MixedTree MixedTree::singleton(SpeciesId species) {
  MixedTree t;
  t.add_node(species);
  return t;
}

NodeId MixedTree::add_node(std::optional<SpeciesId> label) {
  NodeId u;
  if (!free_.empty()) {
    u = free_.back();
    free_.pop_back();
    alive_[u] = 1;
    label_[u] = -1;
  } else {
    u = static_cast<NodeId>(adj_.size());
    adj_.emplace_back();
    label_.push_back(-1);
    alive_.push_back(1);
  }
  ++live_;
  if (label) set_label(u, *label);
  return u;
}

void MixedTree::remove_node(NodeId u) {
  if (!alive(u)) throw Error(ErrorCode::kInvalidArgument, "node " + std::to_string(u) + " is not in the tree");
  if (!adj_[u].empty()) throw Error(ErrorCode::kInvalidArgument, "cannot remove a node that still has edges");
  if (is_labelled(u)) clear_label(u);
  alive_[u] = 0;
  free_.push_back(u);
  --live_;
}

void MixedTree::connect(NodeId u, NodeId v) {
  if (u == v || !alive(u) || !alive(v)) throw Error(ErrorCode::kInvalidArgument, "bad edge endpoints");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edges_;
}

void MixedTree::disconnect(NodeId u, NodeId v) {
  auto& au = adj_[u];
  auto& av = adj_[v];
  auto iu = std::find(au.begin(), au.end(), v);
  auto iv = std::find(av.begin(), av.end(), u);
  if (iu == au.end() || iv == av.end()) {
    throw Error(ErrorCode::kNotAdjacent,
                "nodes " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
  au.erase(iu);
  av.erase(iv);
  --edges_;
}

void MixedTree::replace_neighbor(NodeId u, NodeId from, NodeId to) {
  auto& au = adj_[u];
  auto it = std::find(au.begin(), au.end(), from);
  if (it == au.end()) throw Error(ErrorCode::kNotAdjacent, "replace_neighbor: not adjacent");
  *it = to;
}

NodeId MixedTree::subdivide(Edge e) {
  if (!has_edge(e.u, e.v)) {
    throw Error(ErrorCode::kNotAdjacent,
                "no edge between " + std::to_string(e.u) + " and " + std::to_string(e.v));
  }
  NodeId w = add_node();
  replace_neighbor(e.u, e.v, w);
  replace_neighbor(e.v, e.u, w);
  adj_[w] = {e.u, e.v};
  ++edges_;
  return w;
}

void MixedTree::unsubdivide(NodeId w) {
  if (adj_[w].size() != 2) throw Error(ErrorCode::kInvalidArgument, "unsubdivide needs a degree-2 node");
  NodeId a = adj_[w][0];
  NodeId b = adj_[w][1];
  replace_neighbor(a, w, b);
  replace_neighbor(b, w, a);
  adj_[w].clear();
  --edges_;
  remove_node(w);
}

void MixedTree::set_label(NodeId u, SpeciesId species) {
  if (is_labelled(u)) {
    throw Error(ErrorCode::kAlreadyLabelled, "node " + std::to_string(u) + " is already labelled");
  }
  if (species >= species_node_.size()) species_node_.resize(species + 1, kNoNode);
  if (species_node_[species] != kNoNode) {
    throw Error(ErrorCode::kDuplicateLabel, "species " + std::to_string(species) + " is already in the tree");
  }
  species_node_[species] = u;
  label_[u] = static_cast<std::int32_t>(species);
  ++labelled_;
}

void MixedTree::clear_label(NodeId u) {
  if (!is_labelled(u)) throw Error(ErrorCode::kNotLabelled, "node " + std::to_string(u) + " is unlabelled");
  species_node_[static_cast<SpeciesId>(label_[u])] = kNoNode;
  label_[u] = -1;
  --labelled_;
}

bool MixedTree::has_edge(NodeId u, NodeId v) const {
  if (!alive(u) || !alive(v)) return false;
  const auto& au = adj_[u];
  return std::find(au.begin(), au.end(), v) != au.end();
}

std::optional<NodeId> MixedTree::node_of(SpeciesId species) const {
  if (species >= species_node_.size() || species_node_[species] == kNoNode) return std::nullopt;
  return species_node_[species];
}

std::vector<NodeId> MixedTree::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    if (alive_[u]) out.push_back(u);
  }
  return out;
}

std::vector<Edge> MixedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    if (!alive_[u]) continue;
    for (NodeId v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

NodeId MixedTree::first_node() const {
  for (NodeId u = 0; u < adj_.size(); ++u) {
    if (alive_[u]) return u;
  }
  return kNoNode;
}

std::string MixedTree::validate() const {
  if (live_ == 0) return "tree is empty";
  if (edges_ != live_ - 1) return "edge count is not node count - 1";
  std::vector<char> seen(adj_.size(), 0);
  std::vector<NodeId> stack{first_node()};
  seen[stack.back()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId v : adj_[u]) {
      if (!alive(v)) return "edge to a removed node";
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  if (reached != live_) return "tree is not connected";
  std::size_t labels = 0;
  for (NodeId u = 0; u < adj_.size(); ++u) {
    if (!alive_[u]) continue;
    if (adj_[u].size() <= 1 && !is_labelled(u)) return "unlabelled leaf " + std::to_string(u);
    if (is_labelled(u)) {
      ++labels;
      if (species_node_[species(u)] != u) return "label index is inconsistent";
    }
  }
  if (labels != labelled_) return "labelled count is inconsistent";
  return {};
}

bool MixedTree::is_compact() const {
  for (NodeId u = 0; u < adj_.size(); ++u) {
    if (alive_[u] && !is_labelled(u) && adj_[u].size() < 3) return false;
  }
  return true;
}

RootedView::RootedView(const MixedTree& tree, NodeId root)
    : tree_(&tree), root_(root), parent_(tree.capacity(), kNoNode) {
  if (!tree.alive(root)) throw Error(ErrorCode::kEmptyTree, "root is not a node of the tree");
  order_.reserve(tree.node_count());
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    order_.push_back(u);
    auto nbrs = tree.neighbors(u);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (*it != parent_[u]) {
        parent_[*it] = u;
        stack.push_back(*it);
      }
    }
  }
}

namespace {

void require_absent(const MixedTree& tree, SpeciesId s) {
  if (tree.node_of(s)) {
    throw Error(ErrorCode::kDuplicateLabel, "species " + std::to_string(s) + " is already in the tree");
  }
}

void require_node(const MixedTree& tree, NodeId u) {
  if (!tree.alive(u)) throw Error(ErrorCode::kInvalidArgument, "node " + std::to_string(u) + " is not in the tree");
}

}  // namespace

JunctionInsert insert_junction_leaf(MixedTree& tree, Edge edge, SpeciesId s) {
  require_absent(tree, s);
  NodeId w = tree.subdivide(edge);
  NodeId leaf = tree.add_node(s);
  tree.connect(w, leaf);
  return {w, leaf};
}

void revert_junction_leaf(MixedTree& tree, Edge, JunctionInsert inserted) {
  tree.disconnect(inserted.junction, inserted.leaf);
  tree.remove_node(inserted.leaf);
  tree.unsubdivide(inserted.junction);
}

NodeId insert_on_edge(MixedTree& tree, Edge edge, SpeciesId s) {
  require_absent(tree, s);
  NodeId w = tree.subdivide(edge);
  tree.set_label(w, s);
  return w;
}

void revert_insert_on_edge(MixedTree& tree, Edge, NodeId inserted) {
  tree.clear_label(inserted);
  tree.unsubdivide(inserted);
}

NodeId attach_leaf(MixedTree& tree, NodeId u, SpeciesId s) {
  require_node(tree, u);
  require_absent(tree, s);
  NodeId leaf = tree.add_node(s);
  tree.connect(u, leaf);
  return leaf;
}

void revert_attach_leaf(MixedTree& tree, NodeId leaf) {
  NodeId u = tree.neighbors(leaf)[0];
  tree.disconnect(u, leaf);
  tree.remove_node(leaf);
}

void label_node(MixedTree& tree, NodeId u, SpeciesId s) {
  require_node(tree, u);
  if (tree.is_labelled(u)) throw Error(ErrorCode::kAlreadyLabelled, "node " + std::to_string(u) + " is labelled");
  require_absent(tree, s);
  tree.set_label(u, s);
}

void revert_label_node(MixedTree& tree, NodeId u) { tree.clear_label(u); }

MixedTree grow_rule_1(const MixedTree& tree, Edge edge, SpeciesId s) {
  MixedTree out = tree;
  insert_junction_leaf(out, edge, s);
  return out;
}

MixedTree grow_rule_2(const MixedTree& tree, Edge edge, SpeciesId s) {
  MixedTree out = tree;
  insert_on_edge(out, edge, s);
  return out;
}

MixedTree grow_rule_3(const MixedTree& tree, NodeId u, SpeciesId s) {
  MixedTree out = tree;
  attach_leaf(out, u, s);
  return out;
}

MixedTree grow_rule_4(const MixedTree& tree, NodeId u, SpeciesId s) {
  MixedTree out = tree;
  label_node(out, u, s);
  return out;
}

NodeId split_node_in_place(MixedTree& tree, NodeId u, std::pair<NodeId, NodeId> moved) {
  require_node(tree, u);
  if (tree.degree(u) < 4) {
    throw Error(ErrorCode::kSplitUnderflow,
                "node " + std::to_string(u) + " has degree " + std::to_string(tree.degree(u)) + "; split needs >= 4");
  }
  if (moved.first == moved.second || !tree.has_edge(u, moved.first) || !tree.has_edge(u, moved.second)) {
    throw Error(ErrorCode::kNotAdjacent, "split needs two distinct neighbours of the node");
  }
  NodeId w = tree.add_node();
  for (NodeId a : {moved.first, moved.second}) {
    tree.disconnect(u, a);
    tree.connect(w, a);
  }
  tree.connect(u, w);
  return w;
}

MixedTree split_node(const MixedTree& tree, NodeId u, std::pair<NodeId, NodeId> moved) {
  MixedTree out = tree;
  split_node_in_place(out, u, moved);
  return out;
}

NodeId contract_in_place(MixedTree& tree, Edge edge) {
  const NodeId u = edge.u;
  const NodeId v = edge.v;
  if (!tree.has_edge(u, v)) {
    throw Error(ErrorCode::kNotAdjacent, "no edge between " + std::to_string(u) + " and " + std::to_string(v));
  }
  if (tree.is_labelled(u) && tree.is_labelled(v)) {
    throw Error(ErrorCode::kLabelCollision, "cannot contract an edge between two labelled nodes");
  }
  std::vector<NodeId> moved;
  for (NodeId y : tree.neighbors(v)) {
    if (y != u) moved.push_back(y);
  }
  tree.disconnect(u, v);
  for (NodeId y : moved) {
    tree.disconnect(v, y);
    tree.connect(u, y);
  }
  if (tree.is_labelled(v)) {
    SpeciesId s = tree.species(v);
    tree.clear_label(v);
    tree.set_label(u, s);
  }
  tree.remove_node(v);
  return u;
}

MixedTree contract_edge(const MixedTree& tree, Edge edge) {
  MixedTree out = tree;
  contract_in_place(out, edge);
  return out;
}

NodeId move_label_to_leaf_in_place(MixedTree& tree, NodeId u) {
  require_node(tree, u);
  if (!tree.is_labelled(u)) throw Error(ErrorCode::kNotLabelled, "node " + std::to_string(u) + " is unlabelled");
  if (tree.degree(u) < 2) throw Error(ErrorCode::kNotInternal, "node " + std::to_string(u) + " is a leaf");
  const SpeciesId s = tree.species(u);
  const NodeId v = tree.neighbors(u)[0];
  NodeId k = tree.subdivide({u, v});
  tree.clear_label(u);
  return attach_leaf(tree, k, s);
}

MixedTree move_internal_label_to_leaf(const MixedTree& tree, NodeId u) {
  MixedTree out = tree;
  move_label_to_leaf_in_place(out, u);
  return out;
}

MixedTree labels_to_leaves(const MixedTree& tree) {
  MixedTree out = tree;
  for (NodeId u : tree.nodes()) {
    if (tree.is_labelled(u) && tree.degree(u) >= 2) move_label_to_leaf_in_place(out, u);
  }
  return out;
}

void suppress_in_place(MixedTree& tree) {
  bool changed = true;
  while (changed && tree.node_count() > 1) {
    changed = false;
    for (NodeId u : tree.nodes()) {
      if (tree.node_count() <= 1) break;
      if (!tree.alive(u) || tree.is_labelled(u)) continue;
      if (tree.degree(u) == 1) {
        tree.disconnect(u, tree.neighbors(u)[0]);
        tree.remove_node(u);
        changed = true;
      } else if (tree.degree(u) == 2) {
        tree.unsubdivide(u);
        changed = true;
      }
    }
  }
}

MixedTree suppress_degree2_unlabelled(const MixedTree& tree) {
  MixedTree out = tree;
  suppress_in_place(out);
  return out;
}

MixedTree tree_from_edges(const std::vector<std::optional<SpeciesId>>& labels,
                          const std::vector<std::pair<NodeId, NodeId>>& edges) {
  MixedTree t;
  for (const auto& l : labels) t.add_node(l);
  for (auto [a, b] : edges) t.connect(a, b);
  return t;
}

}  // namespace parsicompact
