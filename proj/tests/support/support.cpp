#include "support.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace support {

MixedTree random_mixed_tree(std::size_t n, Rng& rng) {
  std::vector<SpeciesId> order(n);
  for (SpeciesId s = 0; s < n; ++s) order[s] = s;
  rng.shuffle(order);
  MixedTree tree = MixedTree::singleton(order[0]);
  for (std::size_t k = 1; k < n; ++k) {
    SpeciesId s = order[k];
    std::vector<NodeId> nodes = tree.nodes();
    std::vector<Edge> edges = tree.edges();
    std::vector<NodeId> free_nodes;
    for (NodeId u : nodes) {
      if (!tree.is_labelled(u)) free_nodes.push_back(u);
    }
    while (true) {
      int rule = static_cast<int>(rng.below(4)) + 1;
      if ((rule == 1 || rule == 2) && edges.empty()) continue;
      if (rule == 4 && free_nodes.empty()) continue;
      if (rule == 1) {
        insert_junction_leaf(tree, edges[rng.below(edges.size())], s);
      } else if (rule == 2) {
        insert_on_edge(tree, edges[rng.below(edges.size())], s);
      } else if (rule == 3) {
        attach_leaf(tree, nodes[rng.below(nodes.size())], s);
      } else {
        label_node(tree, free_nodes[rng.below(free_nodes.size())], s);
      }
      break;
    }
  }
  return tree;
}

MixedTree random_cubic_tree(std::size_t n, Rng& rng) {
  std::vector<SpeciesId> order(n);
  for (SpeciesId s = 0; s < n; ++s) order[s] = s;
  rng.shuffle(order);
  MixedTree tree = MixedTree::singleton(order[0]);
  if (n >= 2) attach_leaf(tree, tree.first_node(), order[1]);
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Edge> edges = tree.edges();
    insert_junction_leaf(tree, edges[rng.below(edges.size())], order[k]);
  }
  return tree;
}

MixedTree with_degree2_nodes(const MixedTree& tree, std::size_t count, Rng& rng) {
  MixedTree out = tree;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Edge> edges = out.edges();
    if (edges.empty()) break;
    out.subdivide(edges[rng.below(edges.size())]);
  }
  return out;
}

int sankoff_cost(const MixedTree& tree, const CharacterMatrix& matrix) {
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  RootedView view(tree, tree.first_node());
  auto order = view.preorder();
  int total = 0;
  std::vector<std::vector<int>> best(tree.capacity());
  for (std::size_t i = 0; i < matrix.m(); ++i) {
    const std::size_t k = matrix.alphabet(i).size();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId u = *it;
      std::vector<int>& cost = best[u];
      cost.assign(k, 0);
      if (tree.is_labelled(u)) {
        for (std::size_t a = 0; a < k; ++a) cost[a] = a == matrix.state(tree.species(u), i) ? 0 : kInf;
      }
      for (NodeId c : tree.neighbors(u)) {
        if (c == view.parent(u)) continue;
        for (std::size_t a = 0; a < k; ++a) {
          if (cost[a] >= kInf) continue;
          int cheapest = kInf;
          for (std::size_t b = 0; b < k; ++b) cheapest = std::min(cheapest, best[c][b] + (a == b ? 0 : 1));
          cost[a] += cheapest;
        }
      }
    }
    total += *std::min_element(best[view.root()].begin(), best[view.root()].end());
  }
  return total;
}

namespace {

void contract_all(const MixedTree& tree, const CharacterMatrix& matrix, int cost, ExhaustiveContraction& out) {
  ++out.paths;
  if (tree.node_count() < out.best_nodes) {
    out.best_nodes = tree.node_count();
    out.keys.clear();
  }
  if (tree.node_count() == out.best_nodes) out.keys.insert(canonical_key(tree));
  for (const Edge& e : tree.edges()) {
    if (tree.is_labelled(e.u) && tree.is_labelled(e.v)) continue;
    MixedTree next = contract_edge(tree, e);
    if (sankoff_cost(next, matrix) == cost) contract_all(next, matrix, cost, out);
  }
}

}  // namespace

ExhaustiveContraction exhaustive_contractions(const MixedTree& tree, const CharacterMatrix& matrix) {
  ExhaustiveContraction out;
  out.best_nodes = tree.node_count();
  contract_all(tree, matrix, sankoff_cost(tree, matrix), out);
  return out;
}

std::uint64_t odd_double_factorial(int k) {
  std::uint64_t v = 1;
  for (int j = 2 * k - 1; j > 1; j -= 2) v *= static_cast<std::uint64_t>(j);
  return v;
}

CharacterMatrix random_small_matrix(std::size_t n, std::size_t m, unsigned max_states, Rng& rng) {
  std::vector<std::string> names;
  std::vector<std::string> seqs(n);
  for (std::size_t s = 0; s < n; ++s) names.push_back("t" + std::to_string(s));
  for (std::size_t j = 0; j < m; ++j) {
    const unsigned k = 1 + static_cast<unsigned>(rng.below(max_states));
    for (std::size_t s = 0; s < n; ++s) seqs[s].push_back(static_cast<char>('a' + rng.below(k)));
  }
  return CharacterMatrix::from_strings(names, seqs);
}

}  // namespace support
