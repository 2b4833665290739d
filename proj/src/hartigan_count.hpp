#pragma once

#include <vector>

#include "parsicompact/state_set.hpp"

namespace parsicompact::detail {

// Counts, for every state, how many child upper sets contain it. levels[j]
// holds the states seen in at least j+1 children, so the highest non-empty
// level is the maximal count K and each add is a handful of word operations.
class LevelCounter {
 public:
  void reset() { top_ = 0; }

  void add(StateSet child) {
    if (levels_.size() <= top_) levels_.resize(top_ + 1);
    if (top_ > 0) levels_[top_] = StateSet{};
    for (std::size_t j = top_; j > 0; --j) levels_[j] |= levels_[j - 1] & child;
    if (top_ == 0) {
      levels_[0] = child;
    } else {
      levels_[0] |= child;
    }
    if (!levels_[top_].empty()) ++top_;
  }

  // Maximal multiplicity K.
  int max_count() const { return static_cast<int>(top_); }

  // States reaching K.
  StateSet upper(StateSet alphabet) const { return top_ == 0 ? alphabet : levels_[top_ - 1]; }

  // States reaching exactly K-1.
  StateSet lower(StateSet alphabet) const {
    if (top_ == 0) return StateSet{};
    if (top_ == 1) return alphabet - levels_[0];
    return levels_[top_ - 2] - levels_[top_ - 1];
  }

 private:
  std::vector<StateSet> levels_;
  std::size_t top_ = 0;
};

}  // namespace parsicompact::detail
