#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parsicompact/state_set.hpp"

namespace parsicompact {

using SpeciesId = std::uint32_t;

// Distinct state symbols of one character, sorted, mapped onto 0..size-1.
class StateAlphabet {
 public:
  StateAlphabet(std::size_t character_index, std::vector<std::string> symbols);

  std::size_t character_index() const { return character_index_; }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(StateIndex s) const { return symbols_.at(s); }
  std::optional<StateIndex> index_of(std::string_view symbol) const;
  StateSet all() const { return StateSet::first(static_cast<unsigned>(size())); }

  friend bool operator==(const StateAlphabet&, const StateAlphabet&) = default;

 private:
  std::size_t character_index_;
  std::vector<std::string> symbols_;
};

struct Species {
  SpeciesId id;
  std::string name;
  std::vector<StateIndex> value;

  friend bool operator==(const Species&, const Species&) = default;
};

// n species by m characters. Immutable once built; alphabets are inferred per
// column from the symbols that actually occur in it.
class CharacterMatrix {
 public:
  // rows[i][j] is the symbol of species i at character j.
  static CharacterMatrix from_rows(std::vector<std::string> names,
                                   const std::vector<std::vector<std::string>>& rows);
  // Convenience for one-character-per-symbol data such as alignments.
  static CharacterMatrix from_strings(std::vector<std::string> names,
                                      const std::vector<std::string>& sequences);

  std::size_t n() const { return species_.size(); }
  std::size_t m() const { return alphabets_.size(); }

  const Species& species(SpeciesId id) const { return species_.at(id); }
  const std::vector<Species>& all_species() const { return species_; }
  const StateAlphabet& alphabet(std::size_t character) const { return alphabets_.at(character); }
  const std::vector<StateAlphabet>& alphabets() const { return alphabets_; }

  StateIndex state(SpeciesId id, std::size_t character) const { return species_[id].value[character]; }
  StateSet singleton(SpeciesId id, std::size_t character) const {
    return StateSet::single(species_[id].value[character]);
  }
  std::optional<SpeciesId> find(std::string_view name) const;
  std::vector<std::string> names() const;

  // Symbol of species id at character j, as it appeared in the input.
  const std::string& symbol(SpeciesId id, std::size_t character) const {
    return alphabets_[character].symbol(species_[id].value[character]);
  }

  // Number of characters in which two species differ.
  int hamming(SpeciesId a, SpeciesId b) const;

  friend bool operator==(const CharacterMatrix&, const CharacterMatrix&) = default;

 private:
  CharacterMatrix() = default;

  std::vector<Species> species_;
  std::vector<StateAlphabet> alphabets_;
};

struct FastaOptions {
  // Treat gap, missing and ambiguity symbols as ordinary states instead of rejecting them.
  bool allow_ambiguity = false;
};

CharacterMatrix parse_fasta(std::istream& input, const FastaOptions& options = {});
CharacterMatrix parse_fasta_file(const std::string& path, const FastaOptions& options = {});
void write_fasta(const CharacterMatrix& matrix, std::ostream& out, std::size_t line_width = 60);

// First k characters of every species.
CharacterMatrix restrict_columns(const CharacterMatrix& matrix, std::size_t k);

// count distinct species drawn with a seeded shuffle; retained species keep
// their relative input order.
CharacterMatrix subsample_species(const CharacterMatrix& matrix, std::size_t count, std::uint64_t seed);

// Uniform random data with `states` states per character (1..30). Up to four
// states are written A, C, G, T.
CharacterMatrix random_matrix(std::size_t n, std::size_t m, unsigned states, std::uint64_t seed);

}  // namespace parsicompact
