#include "parsicompact/parsimony.hpp"

#include <string>

#include "hartigan_count.hpp"
#include "parsicompact/error.hpp"

namespace parsicompact {

ScoreResult fitch_score(const RootedView& view, const CharacterMatrix& matrix) {
  const MixedTree& tree = view.tree();
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  const std::size_t m = matrix.m();
  ScoreResult result;
  result.root = view.root();
  result.upper.reset(tree.capacity(), m);
  result.lower.reset(tree.capacity(), m);

  auto order = view.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId u = *it;
    std::size_t kids = view.child_count(u);
    if (kids == 0) {
      if (!tree.is_labelled(u)) throw Error(ErrorCode::kNotBinary, "unlabelled leaf " + std::to_string(u));
      for (std::size_t i = 0; i < m; ++i) result.upper.at(u, i) = matrix.singleton(tree.species(u), i);
      continue;
    }
    if (kids != 2 || tree.is_labelled(u)) {
      throw Error(ErrorCode::kNotBinary, "node " + std::to_string(u) + " is not a binary unlabelled internal node");
    }
    NodeId a = kNoNode;
    NodeId b = kNoNode;
    for (NodeId c : tree.neighbors(u)) {
      if (c == view.parent(u)) continue;
      (a == kNoNode ? a : b) = c;
    }
    for (std::size_t i = 0; i < m; ++i) {
      StateSet x = result.upper.at(a, i);
      StateSet y = result.upper.at(b, i);
      StateSet both = x & y;
      if (both.empty()) {
        result.upper.at(u, i) = x | y;
        ++result.mp_cost;
      } else {
        result.upper.at(u, i) = both;
      }
    }
  }
  result.root_sets = result.upper;
  return result;
}

BottomUpResult hartigan_bottom_up(const RootedView& view, const CharacterMatrix& matrix) {
  const MixedTree& tree = view.tree();
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  const std::size_t m = matrix.m();
  BottomUpResult result;
  result.upper.reset(tree.capacity(), m);
  result.lower.reset(tree.capacity(), m);
  detail::LevelCounter counter;

  auto order = view.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId u = *it;
    NodeId parent = view.parent(u);
    auto nbrs = tree.neighbors(u);
    int kids = static_cast<int>(view.child_count(u));
    if (tree.is_labelled(u)) {
      SpeciesId s = tree.species(u);
      for (std::size_t i = 0; i < m; ++i) {
        StateIndex x = matrix.state(s, i);
        result.upper.at(u, i) = StateSet::single(x);
        for (NodeId c : nbrs) {
          if (c != parent && !result.upper.at(c, i).contains(x)) ++result.mp_cost;
        }
      }
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      StateSet alphabet = matrix.alphabet(i).all();
      counter.reset();
      for (NodeId c : nbrs) {
        if (c != parent) counter.add(result.upper.at(c, i));
      }
      result.upper.at(u, i) = counter.upper(alphabet);
      result.lower.at(u, i) = counter.lower(alphabet);
      result.mp_cost += kids - counter.max_count();
    }
  }
  return result;
}

SetTable hartigan_top_down(const RootedView& view, const BottomUpResult& bottom_up) {
  const MixedTree& tree = view.tree();
  const std::size_t m = bottom_up.upper.m();
  SetTable root_sets(tree.capacity(), m);
  for (NodeId u : view.preorder()) {
    NodeId p = view.parent(u);
    for (std::size_t i = 0; i < m; ++i) {
      StateSet up = bottom_up.upper.at(u, i);
      if (p == kNoNode) {
        root_sets.at(u, i) = up;
        continue;
      }
      StateSet above = root_sets.at(p, i);
      root_sets.at(u, i) = above.subset_of(up) ? above : up | (above & bottom_up.lower.at(u, i));
    }
  }
  return root_sets;
}

ScoreResult score_rooted(const RootedView& view, const CharacterMatrix& matrix) {
  BottomUpResult bu = hartigan_bottom_up(view, matrix);
  ScoreResult result;
  result.mp_cost = bu.mp_cost;
  result.root = view.root();
  result.root_sets = hartigan_top_down(view, bu);
  result.upper = std::move(bu.upper);
  result.lower = std::move(bu.lower);
  return result;
}

NodeId default_root(const MixedTree& tree) {
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  for (NodeId u = 0; u < tree.capacity(); ++u) {
    if (tree.alive(u) && !tree.is_labelled(u) && tree.degree(u) >= 2) return u;
  }
  return tree.first_node();
}

ScoreResult score_unrooted(const MixedTree& tree, const CharacterMatrix& matrix) {
  RootedView view(tree, default_root(tree));
  return score_rooted(view, matrix);
}

ScoreResult score_mixed_constrained(const MixedTree& tree, const CharacterMatrix& matrix) {
  return score_unrooted(tree, matrix);
}

int mp_cost(const MixedTree& tree, const CharacterMatrix& matrix) {
  RootedView view(tree, default_root(tree));
  return hartigan_bottom_up(view, matrix).mp_cost;
}

int min_cost_edge(std::span<const StateSet> u_root, std::span<const StateSet> v_root) {
  if (u_root.size() != v_root.size()) {
    throw Error(ErrorCode::kArityMismatch, "root set tuples have lengths " + std::to_string(u_root.size()) +
                                               " and " + std::to_string(v_root.size()));
  }
  int d = 0;
  for (std::size_t i = 0; i < u_root.size(); ++i) d += u_root[i].intersects(v_root[i]) ? 0 : 1;
  return d;
}

int min_cost_edge(const NodeSets& u, const NodeSets& v) { return min_cost_edge(u.root, v.root); }

FitAssignment extract_fit(const MixedTree& tree, const ScoreResult& score, const CharacterMatrix& matrix) {
  const std::size_t m = matrix.m();
  FitAssignment fit;
  fit.states.resize(tree.capacity());
  RootedView view(tree, score.root);
  for (NodeId u : view.preorder()) {
    auto& row = fit.states[u];
    row.resize(m);
    NodeId p = view.parent(u);
    for (std::size_t i = 0; i < m; ++i) {
      if (tree.is_labelled(u)) {
        row[i] = matrix.state(tree.species(u), i);
      } else if (p == kNoNode) {
        row[i] = static_cast<StateIndex>(score.root_sets.at(u, i).lowest());
      } else {
        StateIndex above = fit.states[p][i];
        StateSet up = score.upper.at(u, i);
        row[i] = up.contains(above) ? above : static_cast<StateIndex>(up.lowest());
      }
    }
  }
  fit.total_cost = fit_cost(tree, fit);
  return fit;
}

int fit_cost(const MixedTree& tree, const FitAssignment& fit) {
  int cost = 0;
  for (const Edge& e : tree.edges()) {
    const auto& a = fit.states[e.u];
    const auto& b = fit.states[e.v];
    for (std::size_t i = 0; i < a.size(); ++i) cost += a[i] != b[i] ? 1 : 0;
  }
  return cost;
}

}  // namespace parsicompact
