#include "parsicompact/contract.hpp"

#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "parsicompact/error.hpp"

namespace parsicompact {

std::vector<Edge> zero_min_cost_edges(const MixedTree& tree, const SetTable& root_sets) {
  std::vector<Edge> out;
  for (const Edge& e : tree.edges()) {
    if (tree.is_labelled(e.u) && tree.is_labelled(e.v)) continue;
    if (min_cost_edge(root_sets.row(e.u), root_sets.row(e.v)) == 0) out.push_back(e);
  }
  return out;
}

ContractionState make_contraction_state(MixedTree tree, const CharacterMatrix& matrix) {
  ContractionState state;
  state.sets = DirectedSets(tree, matrix);
  state.zero_edges = zero_min_cost_edges(tree, state.sets.root_sets());
  state.tree = std::move(tree);
  return state;
}

ContractionState contract_and_update(const ContractionState& state, Edge edge, const CharacterMatrix& matrix) {
  const MixedTree& tree = state.tree;
  if (!tree.alive(edge.u) || !tree.alive(edge.v) || !tree.has_edge(edge.u, edge.v)) {
    throw Error(ErrorCode::kIllegalContraction, "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                                                    ") is not an edge of the tree");
  }
  if (tree.is_labelled(edge.u) && tree.is_labelled(edge.v)) {
    throw Error(ErrorCode::kIllegalContraction, "both endpoints are labelled");
  }
  if (min_cost_edge(state.sets.root_set(edge.u), state.sets.root_set(edge.v)) != 0) {
    throw Error(ErrorCode::kIllegalContraction, "edge has a positive min cost");
  }
  ContractionState next;
  next.tree = tree;
  contract_in_place(next.tree, edge);
  next.sets = DirectedSets::after_contraction(state.sets, next.tree, edge.u, edge.v, matrix);
  next.zero_edges = zero_min_cost_edges(next.tree, next.sets.root_sets());
  next.applied = state.applied + 1;
  return next;
}

SetTable propagate_root_sets_by_parent_rule(const MixedTree& before, const SetTable& before_root,
                                            const MixedTree& after, Edge contracted) {
  const std::size_t m = before_root.m();
  const NodeId w = contracted.u;
  SetTable out(after.capacity(), m);
  RootedView view(after, w);
  for (NodeId x : view.preorder()) {
    NodeId p = view.parent(x);
    for (std::size_t i = 0; i < m; ++i) {
      if (p == kNoNode) {
        out.at(x, i) = before_root.at(contracted.u, i) & before_root.at(contracted.v, i);
        continue;
      }
      StateSet old_x = before_root.at(x, i);
      if (after.is_labelled(x)) {
        out.at(x, i) = old_x;
        continue;
      }
      NodeId old_p = p == w && !before.has_edge(x, w) ? contracted.v : p;
      out.at(x, i) = (old_x - before_root.at(old_p, i)) | (old_x & out.at(p, i));
    }
  }
  return out;
}

namespace {

class CompactSearch {
 public:
  CompactSearch(const CharacterMatrix& matrix, const CompactOptions& options) : matrix_(matrix), options_(options) {}

  CompactResultSet run(const MixedTree& tree) {
    ContractionState start = make_contraction_state(tree, matrix_);
    result_.mp_cost = start.sets.tree_cost();
    result_.best_node_count = tree.node_count();
    explore(start);
    return std::move(result_);
  }

 private:
  void explore(const ContractionState& state) {
    ++result_.explored_states;
    CanonicalKey key = canonical_key(state.tree);
    if (options_.memo && !seen_.insert(key.bytes()).second) return;
    const std::size_t nodes = state.tree.node_count();
    if (nodes < result_.best_node_count) {
      result_.best_node_count = nodes;
      result_.trees.clear();
    }
    if (nodes == result_.best_node_count) result_.trees.emplace(std::move(key), state.tree);
    for (const Edge& e : state.zero_edges) {
      ContractionState next = contract_and_update(state, e, matrix_);
      if (options_.oracle_check) check(next);
      explore(next);
    }
  }

  void check(const ContractionState& state) {
    ++result_.oracle_checks;
    ScoreResult full = score_unrooted(state.tree, matrix_);
    bool same = full.mp_cost == state.sets.tree_cost() && full.mp_cost == result_.mp_cost;
    for (NodeId u : state.tree.nodes()) {
      auto a = full.root_sets.row(u);
      auto b = state.sets.root_set(u);
      for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    }
    if (!same) ++result_.oracle_mismatches;
  }

  const CharacterMatrix& matrix_;
  const CompactOptions& options_;
  CompactResultSet result_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

CompactResultSet compact_search(const MixedTree& tree, const CharacterMatrix& matrix, const CompactOptions& options) {
  return CompactSearch(matrix, options).run(tree);
}

PipelineResult most_compact_pipeline(const CharacterMatrix& matrix, const PipelineOptions& options) {
  PipelineResult out;
  out.cubic = enumerate_cubic(matrix, options.search);
  const auto& cubic_trees = out.cubic.incumbents;
  std::vector<CompactResultSet> parts(cubic_trees.size());
  detail::parallel_for(cubic_trees.size(), options.search.threads, [&](std::size_t i) {
    parts[i] = compact_search(cubic_trees[i].tree, matrix, options.compact);
  });

  out.compact.mp_cost = out.cubic.incumbent_cost;
  out.compact.best_node_count = 2 * matrix.n() - 2;
  double contractions = 0.0;
  for (const CompactResultSet& part : parts) {
    out.compact.best_node_count = std::min(out.compact.best_node_count, part.best_node_count);
    contractions += static_cast<double>(2 * matrix.n() - 2 - part.best_node_count);
  }
  for (CompactResultSet& part : parts) {
    out.compact.explored_states += part.explored_states;
    out.compact.oracle_checks += part.oracle_checks;
    out.compact.oracle_mismatches += part.oracle_mismatches;
    if (part.best_node_count != out.compact.best_node_count) continue;
    out.raw_compact_trees += part.trees.size();
    out.compact.trees.merge(part.trees);
  }
  if (!parts.empty()) out.mean_contractions = contractions / static_cast<double>(parts.size());
  return out;
}

}  // namespace parsicompact
