#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "parsicompact/tree.hpp"

namespace parsicompact {

// Serialization of a tree that is equal for two trees exactly when they are
// isomorphic through a map that preserves species labels. Independent of node
// numbering and of where a display root would be placed.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};

// The one or two nodes of minimum eccentricity.
std::vector<NodeId> tree_centers(const MixedTree& tree);

// Orientation of a tree from its canonical root, with every child list sorted
// by the children's subtree encodings. Writing a tree in this order gives the
// same text for all isomorphic copies.
struct CanonicalRooting {
  NodeId root = kNoNode;
  std::vector<std::vector<NodeId>> children;  // indexed by NodeId
  CanonicalKey key;
};

CanonicalRooting canonical_rooting(const MixedTree& tree);
CanonicalKey canonical_key(const MixedTree& tree);

}  // namespace parsicompact
