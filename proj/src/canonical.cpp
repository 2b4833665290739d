#include "parsicompact/canonical.hpp"

#include <algorithm>

#include "parsicompact/error.hpp"

namespace parsicompact {

std::vector<NodeId> tree_centers(const MixedTree& tree) {
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "empty tree has no center");
  if (tree.node_count() <= 2) return tree.nodes();
  std::vector<std::size_t> degree(tree.capacity(), 0);
  std::vector<NodeId> layer;
  for (NodeId u : tree.nodes()) {
    degree[u] = tree.degree(u);
    if (degree[u] == 1) layer.push_back(u);
  }
  std::size_t remaining = tree.node_count();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<NodeId> next;
    for (NodeId u : layer) {
      for (NodeId v : tree.neighbors(u)) {
        if (--degree[v] == 1) next.push_back(v);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7F) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

// Preorder encoding: label (0 = unlabelled, species + 1), child count, then
// the children's encodings in sorted order. Varints keep it prefix-free.
struct Encoder {
  const MixedTree& tree;
  std::vector<std::string> code;
  std::vector<std::vector<NodeId>> children;

  explicit Encoder(const MixedTree& t) : tree(t), code(t.capacity()), children(t.capacity()) {}

  const std::string& encode_from(NodeId root) {
    RootedView view(tree, root);
    auto order = view.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId u = *it;
      auto& kids = children[u];
      kids.clear();
      for (NodeId v : tree.neighbors(u)) {
        if (v != view.parent(u)) kids.push_back(v);
      }
      std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) { return code[a] < code[b]; });
      std::string& out = code[u];
      out.clear();
      put_varint(out, tree.is_labelled(u) ? std::uint64_t{tree.species(u)} + 1 : 0);
      put_varint(out, kids.size());
      for (NodeId v : kids) out += code[v];
    }
    return code[root];
  }
};

}  // namespace

CanonicalRooting canonical_rooting(const MixedTree& tree) {
  const auto centers = tree_centers(tree);
  Encoder enc(tree);
  NodeId best_root = centers[0];
  std::string best = enc.encode_from(best_root);
  if (centers.size() == 2) {
    std::string other = enc.encode_from(centers[1]);
    if (other < best) {
      best_root = centers[1];
      best = std::move(other);
    } else {
      enc.encode_from(best_root);
    }
  }
  CanonicalRooting out;
  out.root = best_root;
  out.children = std::move(enc.children);
  out.key = CanonicalKey(std::move(best));
  return out;
}

CanonicalKey canonical_key(const MixedTree& tree) { return canonical_rooting(tree).key; }

}  // namespace parsicompact
