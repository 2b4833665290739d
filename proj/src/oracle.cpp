#include "parsicompact/oracle.hpp"

#include <string>

#include "parsicompact/error.hpp"

namespace parsicompact {

OracleResult brute_force_best_fit(const MixedTree& tree, const CharacterMatrix& matrix,
                                  const OracleOptions& options) {
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  const std::size_t m = matrix.m();
  std::vector<NodeId> free_nodes;
  for (NodeId u : tree.nodes()) {
    if (!tree.is_labelled(u)) free_nodes.push_back(u);
  }
  std::vector<Edge> edges = tree.edges();

  OracleResult result;
  result.optimal_states.reset(tree.capacity(), m);
  result.per_character.resize(m);

  std::vector<StateIndex> assign(tree.capacity(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned k = static_cast<unsigned>(matrix.alphabet(i).size());
    std::uint64_t space = 1;
    for (std::size_t j = 0; j < free_nodes.size(); ++j) {
      space *= k;
      if (space > options.max_assignments) {
        throw Error(ErrorCode::kOracleTooLarge, std::to_string(free_nodes.size()) + " unlabelled nodes with " +
                                                    std::to_string(k) + " states exceed the oracle limit");
      }
    }
    for (NodeId u : tree.nodes()) {
      if (tree.is_labelled(u)) assign[u] = matrix.state(tree.species(u), i);
    }
    for (NodeId u : free_nodes) assign[u] = 0;

    int best = -1;
    auto& kept = result.per_character[i];
    while (true) {
      int cost = 0;
      for (const Edge& e : edges) cost += assign[e.u] != assign[e.v] ? 1 : 0;
      if (best < 0 || cost < best) {
        best = cost;
        kept.clear();
        for (NodeId u : tree.nodes()) result.optimal_states.at(u, i) = StateSet{};
      }
      if (cost == best) {
        for (NodeId u : tree.nodes()) result.optimal_states.at(u, i).insert(assign[u]);
        if (kept.size() < options.max_fits) {
          kept.push_back(assign);
        } else {
          result.truncated = true;
        }
      }
      std::size_t j = 0;
      while (j < free_nodes.size() && ++assign[free_nodes[j]] == k) assign[free_nodes[j++]] = 0;
      if (j == free_nodes.size()) break;
    }
    result.mp_cost += best;
  }

  std::vector<std::size_t> pick(m, 0);
  while (result.fits.size() < options.max_fits) {
    FitAssignment fit;
    fit.states.resize(tree.capacity());
    for (NodeId u : tree.nodes()) {
      fit.states[u].resize(m);
      for (std::size_t i = 0; i < m; ++i) fit.states[u][i] = result.per_character[i][pick[i]][u];
    }
    fit.total_cost = result.mp_cost;
    result.fits.push_back(std::move(fit));
    std::size_t i = 0;
    while (i < m && ++pick[i] == result.per_character[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  return result;
}

}  // namespace parsicompact
