#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "parsicompact/canonical.hpp"
#include "parsicompact/charmatrix.hpp"
#include "parsicompact/random.hpp"
#include "parsicompact/tree.hpp"

namespace support {

using namespace parsicompact;

// Mixed tree on species 0..n-1 grown by random rules at random places.
MixedTree random_mixed_tree(std::size_t n, Rng& rng);
// Cubic leaf-labelled tree on species 0..n-1 (n >= 2).
MixedTree random_cubic_tree(std::size_t n, Rng& rng);
// Splices `count` unlabelled degree-2 nodes into random edges.
MixedTree with_degree2_nodes(const MixedTree& tree, std::size_t count, Rng& rng);

// Unit-cost Sankoff dynamic program; shares no code with the Hartigan scorer.
int sankoff_cost(const MixedTree& tree, const CharacterMatrix& matrix);

// Fewest-node trees reachable by contracting, in every order and without
// memoization, any edge whose contraction leaves the Sankoff cost unchanged.
struct ExhaustiveContraction {
  std::size_t best_nodes = 0;
  std::set<CanonicalKey> keys;
  std::uint64_t paths = 0;
};
ExhaustiveContraction exhaustive_contractions(const MixedTree& tree, const CharacterMatrix& matrix);

// (2k-1)!! computed by plain multiplication.
std::uint64_t odd_double_factorial(int k);

// Random matrix with per-character alphabet sizes drawn from 1..max_states.
CharacterMatrix random_small_matrix(std::size_t n, std::size_t m, unsigned max_states, Rng& rng);

}  // namespace support
