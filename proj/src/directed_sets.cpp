#include "parsicompact/directed_sets.hpp"

#include <algorithm>

#include "hartigan_count.hpp"
#include "parsicompact/error.hpp"

namespace parsicompact {

void DirectedSets::layout(const MixedTree& tree, std::size_t m) {
  m_ = m;
  base_.assign(tree.capacity() + 1, 0);
  nbr_.clear();
  for (NodeId u = 0; u < tree.capacity(); ++u) {
    base_[u] = nbr_.size();
    if (!tree.alive(u)) continue;
    auto nb = tree.neighbors(u);
    nbr_.insert(nbr_.end(), nb.begin(), nb.end());
  }
  base_[tree.capacity()] = nbr_.size();
  upper_.assign(nbr_.size() * m, StateSet{});
  lower_.assign(nbr_.size() * m, StateSet{});
  cost_.assign(nbr_.size(), 0);
  root_.reset(tree.capacity(), m);
  scratch_.resize(m);
}

std::size_t DirectedSets::slot(NodeId x, NodeId p) const {
  if (x + 1 >= base_.size()) return kNoSlot;
  for (std::size_t k = base_[x]; k < base_[x + 1]; ++k) {
    if (nbr_[k] == p) return k;
  }
  return kNoSlot;
}

void DirectedSets::combine(const MixedTree& tree, const CharacterMatrix& matrix, NodeId p, NodeId excluded,
                           StateSet* upper, StateSet* lower, int& cost) {
  cost = 0;
  int inputs = 0;
  for (std::size_t k = base_[p]; k < base_[p + 1]; ++k) {
    if (nbr_[k] == excluded) continue;
    cost += cost_[slot(nbr_[k], p)];
    ++inputs;
  }
  if (tree.is_labelled(p)) {
    SpeciesId s = tree.species(p);
    for (std::size_t i = 0; i < m_; ++i) {
      StateIndex x = matrix.state(s, i);
      upper[i] = StateSet::single(x);
      lower[i] = StateSet{};
    }
    for (std::size_t k = base_[p]; k < base_[p + 1]; ++k) {
      if (nbr_[k] == excluded) continue;
      const StateSet* in = upper_.data() + slot(nbr_[k], p) * m_;
      for (std::size_t i = 0; i < m_; ++i) cost += in[i].intersects(upper[i]) ? 0 : 1;
    }
    return;
  }
  thread_local detail::LevelCounter counter;
  thread_local std::vector<const StateSet*> inputs_at;
  inputs_at.clear();
  for (std::size_t k = base_[p]; k < base_[p + 1]; ++k) {
    if (nbr_[k] == excluded) continue;
    inputs_at.push_back(upper_.data() + slot(nbr_[k], p) * m_);
  }
  for (std::size_t i = 0; i < m_; ++i) {
    StateSet alphabet = matrix.alphabet(i).all();
    counter.reset();
    for (const StateSet* in : inputs_at) counter.add(in[i]);
    upper[i] = counter.upper(alphabet);
    lower[i] = counter.lower(alphabet);
    cost += inputs - counter.max_count();
  }
}

void DirectedSets::outward(const MixedTree& tree, const CharacterMatrix& matrix, NodeId root) {
  RootedView view(tree, root);
  for (NodeId p : view.preorder()) {
    for (std::size_t k = base_[p]; k < base_[p + 1]; ++k) {
      NodeId x = nbr_[k];
      if (x == view.parent(p)) continue;
      combine(tree, matrix, p, x, upper_.data() + k * m_, lower_.data() + k * m_, cost_[k]);
    }
    int cost = 0;
    combine(tree, matrix, p, kNoNode, root_.row(p).data(), scratch_.data(), cost);
    if (p == root) tree_cost_ = cost;
  }
}

DirectedSets::DirectedSets(const MixedTree& tree, const CharacterMatrix& matrix) {
  if (tree.node_count() == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  layout(tree, matrix.m());
  NodeId root = tree.first_node();
  RootedView view(tree, root);
  auto order = view.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId x = *it;
    NodeId p = view.parent(x);
    if (p == kNoNode) continue;
    std::size_t k = slot(x, p);
    combine(tree, matrix, x, p, upper_.data() + k * m_, lower_.data() + k * m_, cost_[k]);
  }
  outward(tree, matrix, root);
}

DirectedSets DirectedSets::after_contraction(const DirectedSets& before, const MixedTree& after, NodeId merged,
                                             NodeId removed, const CharacterMatrix& matrix) {
  DirectedSets out;
  out.layout(after, before.m_);
  RootedView view(after, merged);
  for (NodeId x : view.preorder()) {
    NodeId p = view.parent(x);
    if (p == kNoNode) continue;
    NodeId old_p = p;
    if (p == merged && before.slot(x, merged) == kNoSlot) old_p = removed;
    std::size_t from = before.slot(x, old_p);
    if (from == kNoSlot) throw Error(ErrorCode::kIllegalContraction, "tree does not match the contracted edge");
    std::size_t to = out.slot(x, p);
    std::copy_n(before.upper_.data() + from * before.m_, before.m_, out.upper_.data() + to * out.m_);
    std::copy_n(before.lower_.data() + from * before.m_, before.m_, out.lower_.data() + to * out.m_);
    out.cost_[to] = before.cost_[from];
  }
  out.outward(after, matrix, merged);
  return out;
}

}  // namespace parsicompact
