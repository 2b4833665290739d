#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parsicompact/charmatrix.hpp"
#include "parsicompact/parsimony.hpp"
#include "parsicompact/tree.hpp"

namespace parsicompact {

struct OracleOptions {
  // Refuse characters whose assignment space exceeds this.
  std::uint64_t max_assignments = std::uint64_t{1} << 22;
  // Cap on optimal assignments kept per character and on materialised fits.
  std::size_t max_fits = 4096;
};

struct OracleResult {
  int mp_cost = 0;
  // States each node takes in at least one best fit.
  SetTable optimal_states;
  // per_character[i] lists optimal assignments of character i; each is
  // indexed by NodeId. Truncated at max_fits.
  std::vector<std::vector<std::vector<StateIndex>>> per_character;
  bool truncated = false;
  // Best fits built as a product of the per-character lists, at most max_fits.
  std::vector<FitAssignment> fits;
};

// Exhaustive small-parsimony solver: tries every state for every unlabelled
// node, one character at a time.
OracleResult brute_force_best_fit(const MixedTree& tree, const CharacterMatrix& matrix,
                                  const OracleOptions& options = {});

}  // namespace parsicompact
