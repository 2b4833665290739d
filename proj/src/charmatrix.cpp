#include "parsicompact/charmatrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "parsicompact/error.hpp"
#include "parsicompact/random.hpp"

namespace parsicompact {

StateAlphabet::StateAlphabet(std::size_t character_index, std::vector<std::string> symbols)
    : character_index_(character_index), symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "character " + std::to_string(character_index) + " has an empty alphabet");
  }
  if (symbols_.size() > kMaxStates) {
    throw Error(ErrorCode::kTooManyStates, "character " + std::to_string(character_index) + " has " +
                                               std::to_string(symbols_.size()) + " states; at most " +
                                               std::to_string(kMaxStates) + " are supported");
  }
  if (!std::is_sorted(symbols_.begin(), symbols_.end()) ||
      std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet symbols must be sorted and distinct");
  }
}

std::optional<StateIndex> StateAlphabet::index_of(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<StateIndex>(it - symbols_.begin());
}

CharacterMatrix CharacterMatrix::from_rows(std::vector<std::string> names,
                                           const std::vector<std::vector<std::string>>& rows) {
  if (names.empty()) throw Error(ErrorCode::kEmptyInput, "no species");
  if (names.size() != rows.size()) {
    throw Error(ErrorCode::kInvalidArgument, "name count does not match row count");
  }
  const std::size_t m = rows.front().size();
  if (m == 0) throw Error(ErrorCode::kEmptyInput, "species '" + names.front() + "' has no characters");

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorCode::kMalformedInput, "empty species name");
    if (!seen.insert(names[i]).second) {
      throw Error(ErrorCode::kDuplicateSpecies, "duplicate species name '" + names[i] + "'");
    }
    if (rows[i].size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "species '" + names[i] + "' has " +
                                                  std::to_string(rows[i].size()) + " characters, expected " +
                                                  std::to_string(m));
    }
  }

  CharacterMatrix matrix;
  matrix.alphabets_.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::set<std::string> symbols;
    for (const auto& row : rows) symbols.insert(row[j]);
    matrix.alphabets_.emplace_back(j, std::vector<std::string>(symbols.begin(), symbols.end()));
  }
  matrix.species_.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    Species s{static_cast<SpeciesId>(i), std::move(names[i]), {}};
    s.value.reserve(m);
    for (std::size_t j = 0; j < m; ++j) s.value.push_back(*matrix.alphabets_[j].index_of(rows[i][j]));
    matrix.species_.push_back(std::move(s));
  }
  return matrix;
}

CharacterMatrix CharacterMatrix::from_strings(std::vector<std::string> names,
                                              const std::vector<std::string>& sequences) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(sequences.size());
  for (const auto& seq : sequences) {
    std::vector<std::string> row;
    row.reserve(seq.size());
    for (char c : seq) row.emplace_back(1, c);
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(names), rows);
}

std::optional<SpeciesId> CharacterMatrix::find(std::string_view name) const {
  for (const auto& s : species_) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

std::vector<std::string> CharacterMatrix::names() const {
  std::vector<std::string> out;
  out.reserve(species_.size());
  for (const auto& s : species_) out.push_back(s.name);
  return out;
}

int CharacterMatrix::hamming(SpeciesId a, SpeciesId b) const {
  int d = 0;
  for (std::size_t j = 0; j < m(); ++j) d += species_[a].value[j] != species_[b].value[j];
  return d;
}

namespace {

constexpr std::string_view kGapSymbols = "-.?*~";
constexpr std::string_view kNucleotideSymbols = "ACGTUNRYKMSWBDHVacgtunrykmswbdhv";
constexpr std::string_view kNucleotideAmbiguity = "NRYKMSWBDHVnrykmswbdhv";
constexpr std::string_view kProteinAmbiguity = "XBZJxbzj";

void reject_ambiguity(const std::vector<std::string>& names, const std::vector<std::string>& sequences) {
  bool nucleotide = true;
  for (const auto& seq : sequences) {
    for (char c : seq) {
      if (kGapSymbols.find(c) == std::string_view::npos && kNucleotideSymbols.find(c) == std::string_view::npos) {
        nucleotide = false;
      }
    }
  }
  const std::string_view ambiguity = nucleotide ? kNucleotideAmbiguity : kProteinAmbiguity;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    for (std::size_t j = 0; j < sequences[i].size(); ++j) {
      const char c = sequences[i][j];
      if (kGapSymbols.find(c) != std::string_view::npos || ambiguity.find(c) != std::string_view::npos) {
        throw Error(ErrorCode::kAmbiguousSymbol, "species '" + names[i] + "' has gap/ambiguity symbol '" +
                                                     std::string(1, c) + "' at column " + std::to_string(j + 1) +
                                                     " (use --allow-ambiguity to treat it as a state)");
      }
    }
  }
}

}  // namespace

CharacterMatrix parse_fasta(std::istream& input, const FastaOptions& options) {
  std::vector<std::string> names;
  std::vector<std::string> sequences;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == ';') continue;
    if (line[0] == '>') {
      std::size_t begin = line.find_first_not_of(" \t", 1);
      if (begin == std::string::npos) {
        throw Error(ErrorCode::kMalformedInput, "line " + std::to_string(line_no) + ": empty FASTA header");
      }
      std::size_t end = line.find_first_of(" \t", begin);
      names.push_back(line.substr(begin, end == std::string::npos ? std::string::npos : end - begin));
      sequences.emplace_back();
      continue;
    }
    if (names.empty()) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": sequence data before the first '>' header");
    }
    for (char c : line) {
      if (c != ' ' && c != '\t') sequences.back().push_back(c);
    }
  }
  if (names.empty()) throw Error(ErrorCode::kEmptyInput, "no FASTA records found");
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    if (sequences[i].size() != sequences.front().size()) {
      throw Error(ErrorCode::kLengthMismatch, "sequence '" + names[i] + "' has length " +
                                                  std::to_string(sequences[i].size()) + ", expected " +
                                                  std::to_string(sequences.front().size()));
    }
  }
  if (!options.allow_ambiguity) reject_ambiguity(names, sequences);
  return CharacterMatrix::from_strings(std::move(names), sequences);
}

CharacterMatrix parse_fasta_file(const std::string& path, const FastaOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_fasta(in, options);
}

void write_fasta(const CharacterMatrix& matrix, std::ostream& out, std::size_t line_width) {
  for (const auto& s : matrix.all_species()) {
    out << '>' << s.name << '\n';
    std::string seq;
    for (std::size_t j = 0; j < matrix.m(); ++j) seq += matrix.symbol(s.id, j);
    for (std::size_t pos = 0; pos < seq.size(); pos += line_width) {
      out << seq.substr(pos, line_width) << '\n';
    }
  }
}

namespace {

CharacterMatrix rebuild(const CharacterMatrix& matrix, const std::vector<SpeciesId>& keep, std::size_t columns) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
  for (SpeciesId id : keep) {
    names.push_back(matrix.species(id).name);
    std::vector<std::string> row;
    row.reserve(columns);
    for (std::size_t j = 0; j < columns; ++j) row.push_back(matrix.symbol(id, j));
    rows.push_back(std::move(row));
  }
  return CharacterMatrix::from_rows(std::move(names), rows);
}

std::vector<SpeciesId> all_ids(const CharacterMatrix& matrix) {
  std::vector<SpeciesId> ids(matrix.n());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<SpeciesId>(i);
  return ids;
}

}  // namespace

CharacterMatrix restrict_columns(const CharacterMatrix& matrix, std::size_t k) {
  if (k < 1 || k > matrix.m()) {
    throw Error(ErrorCode::kBadColumnRange,
                "column count " + std::to_string(k) + " outside 1.." + std::to_string(matrix.m()));
  }
  return rebuild(matrix, all_ids(matrix), k);
}

CharacterMatrix subsample_species(const CharacterMatrix& matrix, std::size_t count, std::uint64_t seed) {
  if (count < 1 || count > matrix.n()) {
    throw Error(ErrorCode::kBadSubsetSize,
                "subset size " + std::to_string(count) + " outside 1.." + std::to_string(matrix.n()));
  }
  std::vector<SpeciesId> ids = all_ids(matrix);
  Rng rng(seed);
  rng.shuffle(ids);
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  return rebuild(matrix, ids, matrix.m());
}

namespace {

// Symbols for more than four states. None is a gap or ambiguity code in
// either nucleotide or protein data.
constexpr std::string_view kRandomSymbols = "0123456789ACDEFGHIKLMNPQRSTVWY";

}  // namespace

CharacterMatrix random_matrix(std::size_t n, std::size_t m, unsigned states, std::uint64_t seed) {
  if (states < 1 || states > kRandomSymbols.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "random data supports 1.." + std::to_string(kRandomSymbols.size()) + " states");
  }
  const std::string_view symbols = states <= 4 ? std::string_view("ACGT") : kRandomSymbols;
  Rng rng(seed);
  std::vector<std::string> names;
  std::vector<std::string> seqs;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("s" + std::to_string(i + 1));
    std::string seq;
    for (std::size_t j = 0; j < m; ++j) seq.push_back(symbols[rng.below(states)]);
    seqs.push_back(std::move(seq));
  }
  return CharacterMatrix::from_strings(std::move(names), seqs);
}

}  // namespace parsicompact
