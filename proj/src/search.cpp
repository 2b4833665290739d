#include "parsicompact/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "parsicompact/directed_sets.hpp"
#include "parsicompact/error.hpp"

namespace parsicompact {

std::vector<SpeciesId> species_order(const CharacterMatrix& matrix, SpeciesOrder order) {
  const std::size_t n = matrix.n();
  std::vector<SpeciesId> ids(n);
  for (SpeciesId s = 0; s < n; ++s) ids[s] = s;
  if (order == SpeciesOrder::kInput || n <= 2) return ids;

  SpeciesId a = 0;
  SpeciesId b = 1;
  int widest = -1;
  for (SpeciesId i = 0; i < n; ++i) {
    for (SpeciesId j = i + 1; j < n; ++j) {
      int d = matrix.hamming(i, j);
      if (d > widest) {
        widest = d;
        a = i;
        b = j;
      }
    }
  }
  std::vector<SpeciesId> out{a, b};
  std::vector<int> nearest(n);
  std::vector<int> total(n, 0);
  std::vector<char> placed(n, 0);
  placed[a] = placed[b] = 1;
  for (SpeciesId s = 0; s < n; ++s) {
    nearest[s] = std::min(matrix.hamming(s, a), matrix.hamming(s, b));
    total[s] = matrix.hamming(s, a) + matrix.hamming(s, b);
  }
  while (out.size() < n) {
    SpeciesId pick = 0;
    bool found = false;
    for (SpeciesId s = 0; s < n; ++s) {
      if (placed[s]) continue;
      if (!found || nearest[s] > nearest[pick] || (nearest[s] == nearest[pick] && total[s] > total[pick])) {
        pick = s;
        found = true;
      }
    }
    placed[pick] = 1;
    out.push_back(pick);
    for (SpeciesId s = 0; s < n; ++s) {
      int d = matrix.hamming(s, pick);
      nearest[s] = std::min(nearest[s], d);
      total[s] += d;
    }
  }
  return out;
}

namespace {

struct Move {
  std::uint8_t rule;
  NodeId a;
  NodeId b;
  int cost;
};

constexpr std::size_t kAddedNodes[5] = {0, 2, 1, 1, 0};

// Cost and node count packed so that one integer comparison orders them
// lexicographically.
std::uint64_t pack(int cost, std::size_t nodes) {
  return (static_cast<std::uint64_t>(cost) << 32) | static_cast<std::uint64_t>(nodes);
}

class VisitedSet {
 public:
  bool insert(const CanonicalKey& key) {
    Shard& shard = shards_[CanonicalKeyHash{}(key) % shards_.size()];
    std::lock_guard lock(shard.mutex);
    return shard.keys.insert(key.bytes()).second;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_set<std::string> keys;
  };
  std::array<Shard, 64> shards_;
};

class Search {
 public:
  Search(const CharacterMatrix& matrix, const SearchOptions& options, bool mixed)
      : matrix_(matrix), options_(options), mixed_(mixed), order_(species_order(matrix, options.order)),
        histogram_(matrix.n() + 1) {}

  SearchRecord run();

 private:
  struct Partial {
    MixedTree tree;
    int cost;
    std::size_t level;
  };

  void moves_for(const MixedTree& tree, const DirectedSets& ds, SpeciesId s, std::vector<Move>& out) const;
  MixedTree apply(const MixedTree& tree, const Move& move, SpeciesId s) const;
  bool bounded_out(int cost, std::size_t nodes) const {
    return options_.prune && pack(cost, nodes) > best_.load(std::memory_order_relaxed);
  }
  // Returns false if the tree is a duplicate; otherwise counts it and records
  // it when complete.
  bool admit(MixedTree& tree, int cost, std::size_t level);
  void complete(MixedTree& tree, int cost, const CanonicalKey* key);
  void children(const Partial& parent, std::vector<Partial>& out);
  void expand(const MixedTree& tree, std::size_t level);
  void tick();

  const CharacterMatrix& matrix_;
  const SearchOptions& options_;
  const bool mixed_;
  const std::vector<SpeciesId> order_;

  std::atomic<std::uint64_t> best_{~std::uint64_t{0}};
  std::mutex incumbent_mutex_;
  std::map<CanonicalKey, MixedTree> incumbents_;
  VisitedSet visited_keys_;
  std::mutex progress_mutex_;

  std::atomic<std::uint64_t> visited_{0};
  std::atomic<std::uint64_t> generated_{0};
  std::atomic<std::uint64_t> duplicates_{0};
  std::atomic<std::uint64_t> pruned_{0};
  std::atomic<std::uint64_t> complete_{0};
  std::vector<std::atomic<std::uint64_t>> histogram_;
};

void Search::moves_for(const MixedTree& tree, const DirectedSets& ds, SpeciesId s, std::vector<Move>& out) const {
  const std::size_t m = matrix_.m();
  const auto& value = matrix_.species(s).value;
  out.clear();
  for (const Edge& e : tree.edges()) {
    std::size_t su = ds.slot(e.u, e.v);
    std::size_t sv = ds.slot(e.v, e.u);
    auto a = ds.upper(su);
    auto b = ds.upper(sv);
    const int base = ds.cost(su) + ds.cost(sv);
    int junction = base;
    int inline_cost = base;
    for (std::size_t i = 0; i < m; ++i) {
      const bool ax = a[i].contains(value[i]);
      const bool bx = b[i].contains(value[i]);
      const bool ab = a[i].intersects(b[i]);
      int k = 1;
      if (ax && bx) {
        k = 3;
      } else if (ab || ax || bx) {
        k = 2;
      }
      junction += 3 - k;
      inline_cost += (ax ? 0 : 1) + (bx ? 0 : 1);
    }
    out.push_back({1, e.u, e.v, junction});
    if (mixed_) out.push_back({2, e.u, e.v, inline_cost});
  }
  if (!mixed_) return;

  const int total = ds.tree_cost();
  std::vector<std::size_t> slots;
  for (NodeId p : tree.nodes()) {
    auto vv = ds.root_set(p);
    int attach = total;
    for (std::size_t i = 0; i < m; ++i) attach += vv[i].contains(value[i]) ? 0 : 1;
    out.push_back({3, p, kNoNode, attach});
    if (tree.is_labelled(p)) continue;
    slots.clear();
    for (NodeId y : tree.neighbors(p)) slots.push_back(ds.slot(y, p));
    int relabel = total;
    for (std::size_t i = 0; i < m; ++i) {
      const unsigned top = vv[i].lowest();
      for (std::size_t k : slots) {
        StateSet up = ds.upper(k)[i];
        relabel += (up.contains(top) ? 1 : 0) - (up.contains(value[i]) ? 1 : 0);
      }
    }
    out.push_back({4, p, kNoNode, relabel});
  }
}

MixedTree Search::apply(const MixedTree& tree, const Move& move, SpeciesId s) const {
  switch (move.rule) {
    case 1:
      return grow_rule_1(tree, Edge{move.a, move.b}, s);
    case 2:
      return grow_rule_2(tree, Edge{move.a, move.b}, s);
    case 3:
      return grow_rule_3(tree, move.a, s);
    default:
      return grow_rule_4(tree, move.a, s);
  }
}

void Search::tick() {
  std::uint64_t v = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (options_.progress && options_.progress_interval > 0 && v % options_.progress_interval == 0) {
    std::lock_guard lock(progress_mutex_);
    std::uint64_t best = best_.load();
    options_.progress({v, pruned_.load(), best == ~std::uint64_t{0} ? SearchRecord::kNoCost
                                                                     : static_cast<int>(best >> 32)});
  }
}

bool Search::admit(MixedTree& tree, int cost, std::size_t level) {
  const bool done = level == order_.size();
  CanonicalKey key;
  bool keyed = false;
  if (mixed_ && options_.dedup) {
    key = canonical_key(tree);
    keyed = true;
    if (!visited_keys_.insert(key)) {
      duplicates_.fetch_add(1, std::memory_order_relaxed);
      return false;
    }
  }
  tick();
  if (done) complete(tree, cost, keyed ? &key : nullptr);
  return true;
}

void Search::complete(MixedTree& tree, int cost, const CanonicalKey* key) {
  complete_.fetch_add(1, std::memory_order_relaxed);
  histogram_[tree.unlabelled_count()].fetch_add(1, std::memory_order_relaxed);
  const std::uint64_t score = pack(cost, tree.node_count());
  if (score > best_.load()) return;
  CanonicalKey own = key ? *key : canonical_key(tree);
  std::lock_guard lock(incumbent_mutex_);
  std::uint64_t best = best_.load();
  if (score > best) return;
  if (score < best) {
    incumbents_.clear();
    best_.store(score);
  }
  incumbents_.emplace(std::move(own), std::move(tree));
}

void Search::children(const Partial& parent, std::vector<Partial>& out) {
  SpeciesId s = order_[parent.level];
  DirectedSets ds(parent.tree, matrix_);
  std::vector<Move> moves;
  moves_for(parent.tree, ds, s, moves);
  for (const Move& mv : moves) {
    if (bounded_out(mv.cost, parent.tree.node_count() + kAddedNodes[mv.rule])) {
      pruned_.fetch_add(1, std::memory_order_relaxed);
      continue;
    }
    MixedTree child = apply(parent.tree, mv, s);
    generated_.fetch_add(1, std::memory_order_relaxed);
    if (admit(child, mv.cost, parent.level + 1) && parent.level + 1 < order_.size()) {
      out.push_back({std::move(child), mv.cost, parent.level + 1});
    }
  }
}

void Search::expand(const MixedTree& tree, std::size_t level) {
  if (level == order_.size()) return;
  SpeciesId s = order_[level];
  DirectedSets ds(tree, matrix_);
  std::vector<Move> moves;
  moves_for(tree, ds, s, moves);
  std::stable_sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
    return pack(x.cost, kAddedNodes[x.rule]) < pack(y.cost, kAddedNodes[y.rule]);
  });
  for (const Move& mv : moves) {
    if (bounded_out(mv.cost, tree.node_count() + kAddedNodes[mv.rule])) {
      pruned_.fetch_add(1, std::memory_order_relaxed);
      continue;
    }
    MixedTree child = apply(tree, mv, s);
    generated_.fetch_add(1, std::memory_order_relaxed);
    if (admit(child, mv.cost, level + 1)) expand(child, level + 1);
  }
}

SearchRecord Search::run() {
  const std::size_t n = order_.size();
  Partial root;
  if (mixed_) {
    if (n == 0) throw Error(ErrorCode::kTooFewSpecies, "mixed search needs at least one species");
    root.tree = MixedTree::singleton(order_[0]);
    root.level = 1;
  } else {
    if (n < 3) throw Error(ErrorCode::kTooFewSpecies, "cubic search needs at least three species");
    root.tree = tree_from_edges({std::nullopt, order_[0], order_[1], order_[2]}, {{0, 1}, {0, 2}, {0, 3}});
    root.level = 3;
  }
  root.cost = DirectedSets(root.tree, matrix_).tree_cost();

  if (admit(root.tree, root.cost, root.level) && root.level < n) {
    std::vector<Partial> frontier;
    frontier.push_back(std::move(root));
    const std::size_t wanted = options_.threads > 1 ? std::size_t{8} * options_.threads : 1;
    while (frontier.size() < wanted && !frontier.empty() && frontier.front().level + 1 < n) {
      std::vector<Partial> next;
      for (const Partial& p : frontier) children(p, next);
      frontier = std::move(next);
    }
    detail::parallel_for(frontier.size(), options_.threads,
                         [&](std::size_t i) { expand(frontier[i].tree, frontier[i].level); });
  }

  SearchRecord record;
  record.species_order = order_;
  const std::uint64_t best = best_.load();
  if (best != ~std::uint64_t{0}) {
    record.incumbent_cost = static_cast<int>(best >> 32);
    record.incumbent_nodes = static_cast<std::size_t>(best & 0xffffffffU);
  }
  for (auto& [key, tree] : incumbents_) record.incumbents.push_back({key, std::move(tree)});
  record.visited = visited_.load();
  record.generated = generated_.load();
  record.duplicates = duplicates_.load();
  record.pruned = pruned_.load();
  record.complete_trees = complete_.load();
  for (auto& h : histogram_) record.complete_by_unlabelled.push_back(h.load());
  while (record.complete_by_unlabelled.size() > 1 && record.complete_by_unlabelled.back() == 0) {
    record.complete_by_unlabelled.pop_back();
  }
  return record;
}

}  // namespace

SearchRecord enumerate_cubic(const CharacterMatrix& matrix, const SearchOptions& options) {
  return Search(matrix, options, false).run();
}

SearchRecord enumerate_mixed(const CharacterMatrix& matrix, const SearchOptions& options) {
  return Search(matrix, options, true).run();
}

}  // namespace parsicompact
