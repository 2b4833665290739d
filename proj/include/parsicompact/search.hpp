#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "parsicompact/canonical.hpp"
#include "parsicompact/charmatrix.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

enum class SpeciesOrder {
  kInput,    // matrix order
  kDiverse,  // most distant pair first, then farthest species from those placed
};

struct SearchProgress {
  std::uint64_t visited = 0;
  std::uint64_t pruned = 0;
  int incumbent_cost = 0;
};

struct SearchOptions {
  bool prune = true;
  unsigned threads = 1;
  SpeciesOrder order = SpeciesOrder::kInput;
  // Mixed search only: drop trees whose canonical key was already seen.
  bool dedup = true;
  std::function<void(const SearchProgress&)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 16;
};

struct IncumbentTree {
  CanonicalKey key;
  MixedTree tree;
};

struct SearchRecord {
  static constexpr int kNoCost = std::numeric_limits<int>::max();

  int incumbent_cost = kNoCost;
  // Node count shared by all incumbents.
  std::size_t incumbent_nodes = 0;
  // Sorted by key.
  std::vector<IncumbentTree> incumbents;
  std::vector<SpeciesId> species_order;

  std::uint64_t visited = 0;     // partial and complete trees accepted
  std::uint64_t generated = 0;   // trees built from a parent by a growth step
  std::uint64_t duplicates = 0;  // generated trees whose key had been seen
  std::uint64_t pruned = 0;      // candidates cut by the bound
  std::uint64_t complete_trees = 0;
  // complete_by_unlabelled[k]: complete trees reached with k unlabelled nodes.
  std::vector<std::uint64_t> complete_by_unlabelled;
};

std::vector<SpeciesId> species_order(const CharacterMatrix& matrix, SpeciesOrder order);

// The cost of a partial tree bounds the cost of everything grown from it,
// since adding a species never lowers the MP-cost.
inline int lower_bound(int partial_cost) { return partial_cost; }
// Only strictly worse partial trees are cut, so co-optimal trees survive.
inline bool should_prune(int bound, int incumbent_cost) { return bound > incumbent_cost; }

// All cubic leaf-labelled trees, built by inserting each species into every
// edge of the trees on the previous species. Incumbents are the MP-trees.
SearchRecord enumerate_cubic(const CharacterMatrix& matrix, const SearchOptions& options = {});

// All mixed trees, built with the four growth rules. Incumbents are the MP
// mixed trees with the fewest nodes.
SearchRecord enumerate_mixed(const CharacterMatrix& matrix, const SearchOptions& options = {});

}  // namespace parsicompact
