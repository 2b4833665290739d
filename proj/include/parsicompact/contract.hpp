#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "parsicompact/canonical.hpp"
#include "parsicompact/charmatrix.hpp"
#include "parsicompact/directed_sets.hpp"
#include "parsicompact/parsimony.hpp"
#include "parsicompact/search.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

// A tree together with the Hartigan sets needed to contract it further.
struct ContractionState {
  MixedTree tree;
  DirectedSets sets;
  // Edges whose endpoints' root sets meet in every character, minus label-label edges.
  std::vector<Edge> zero_edges;
  std::size_t applied = 0;
};

ContractionState make_contraction_state(MixedTree tree, const CharacterMatrix& matrix);

std::vector<Edge> zero_min_cost_edges(const MixedTree& tree, const SetTable& root_sets);

// Contracts a zero min-cost edge into its first endpoint and brings the sets
// up to date without rescoring the whole tree. Throws IllegalContraction for
// any other edge.
ContractionState contract_and_update(const ContractionState& state, Edge edge, const CharacterMatrix& matrix);

// Root sets after contracting (u,v) into u, propagated from the merged node by
//   VV(x) = (VVold(x) \ VVold(parent)) | (VVold(x) & VVnew(parent))
// with VV of the merged node set to VVold(u) & VVold(v). Labelled nodes keep
// their singleton. Kept for comparison only: this rule can disagree with a
// full rescore, which is why contract_and_update does not use it.
SetTable propagate_root_sets_by_parent_rule(const MixedTree& before, const SetTable& before_root,
                                            const MixedTree& after, Edge contracted);

struct CompactOptions {
  // Expand every distinct intermediate tree once.
  bool memo = true;
  // Compare the incrementally maintained sets with a full rescore after every contraction.
  bool oracle_check = false;
};

struct CompactResultSet {
  int mp_cost = 0;
  std::size_t best_node_count = 0;
  std::map<CanonicalKey, MixedTree> trees;
  std::uint64_t explored_states = 0;
  std::uint64_t oracle_checks = 0;
  std::uint64_t oracle_mismatches = 0;
};

// All fewest-node trees reachable from `tree` by contracting zero min-cost
// edges in every possible order.
CompactResultSet compact_search(const MixedTree& tree, const CharacterMatrix& matrix, const CompactOptions& options = {});

struct PipelineOptions {
  SearchOptions search;
  CompactOptions compact;
};

struct PipelineResult {
  SearchRecord cubic;
  // Union of the per-tree results that reach the global fewest node count.
  CompactResultSet compact;
  // Same union counted with repetitions across cubic MP-trees.
  std::uint64_t raw_compact_trees = 0;
  // Mean over cubic MP-trees of the contractions needed to reach that tree's fewest node count.
  double mean_contractions = 0.0;
};

// Cubic branch-and-bound followed by compact_search on every cubic MP-tree.
PipelineResult most_compact_pipeline(const CharacterMatrix& matrix, const PipelineOptions& options = {});

}  // namespace parsicompact
