#pragma once

#include <bit>
#include <cstdint>

namespace parsicompact {

using StateIndex = std::uint8_t;

// Largest alphabet a single character may have; state sets are one machine word.
inline constexpr unsigned kMaxStates = 64;

// A set of states of one character, stored as a flag word.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet single(unsigned state) { return StateSet(std::uint64_t{1} << state); }
  // All states 0..size-1.
  static constexpr StateSet first(unsigned size) {
    return StateSet(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(unsigned state) const { return (bits_ >> state) & 1U; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(StateSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(StateSet other) const { return (bits_ & other.bits_) != 0; }
  // Lowest member; undefined on an empty set.
  constexpr unsigned lowest() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr void insert(unsigned state) { bits_ |= std::uint64_t{1} << state; }

  friend constexpr StateSet operator&(StateSet a, StateSet b) { return StateSet(a.bits_ & b.bits_); }
  friend constexpr StateSet operator|(StateSet a, StateSet b) { return StateSet(a.bits_ | b.bits_); }
  // Set difference.
  friend constexpr StateSet operator-(StateSet a, StateSet b) { return StateSet(a.bits_ & ~b.bits_); }
  constexpr StateSet& operator&=(StateSet o) { bits_ &= o.bits_; return *this; }
  constexpr StateSet& operator|=(StateSet o) { bits_ |= o.bits_; return *this; }
  friend constexpr bool operator==(StateSet, StateSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace parsicompact
