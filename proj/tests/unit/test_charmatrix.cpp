#include <sstream>

#include "doctest.h"
#include "parsicompact/charmatrix.hpp"
#include "parsicompact/error.hpp"

using namespace parsicompact;

namespace {

CharacterMatrix fasta(const std::string& text, bool allow = false) {
  std::istringstream in(text);
  return parse_fasta(in, FastaOptions{allow});
}

ErrorCode code_of(const std::string& text, bool allow = false) {
  try {
    fasta(text, allow);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIo;
}

}  // namespace

TEST_SUITE("charmatrix") {
  TEST_CASE("three species of two characters") {
    CharacterMatrix m = fasta(">A\nAC\n>B\nAG\n>C\nTC\n");
    CHECK(m.n() == 3);
    CHECK(m.m() == 2);
    CHECK(m.alphabet(0).symbols() == std::vector<std::string>{"A", "T"});
    CHECK(m.alphabet(1).symbols() == std::vector<std::string>{"C", "G"});
    CHECK(m.state(2, 0) == 1);
    CHECK(m.symbol(1, 1) == "G");
    CHECK(m.hamming(0, 2) == 1);
    CHECK(m.find("B") == SpeciesId{1});
    CHECK_FALSE(m.find("Z").has_value());
  }

  TEST_CASE("headers, comments, wrapped lines and blanks") {
    CharacterMatrix m = fasta("; a comment\n>alpha some description\nAC\nGT\n\n>beta\r\nAC GA\n");
    CHECK(m.names() == std::vector<std::string>{"alpha", "beta"});
    CHECK(m.m() == 4);
    CHECK(m.symbol(1, 3) == "A");
  }

  TEST_CASE("single-state column") {
    CharacterMatrix m = fasta(">A\nA\n>B\nA\n");
    CHECK(m.alphabet(0).size() == 1);
    CHECK(m.alphabet(0).all() == StateSet::single(0));
  }

  TEST_CASE("input errors") {
    CHECK(code_of("") == ErrorCode::kEmptyInput);
    CHECK(code_of("ACGT\n") == ErrorCode::kMalformedInput);
    CHECK(code_of(">A\nACG\n>B\nAC\n") == ErrorCode::kLengthMismatch);
    CHECK(code_of(">A\nAC\n>A\nAC\n") == ErrorCode::kDuplicateSpecies);
    CHECK(code_of(">A\nA-\n>B\nAC\n") == ErrorCode::kAmbiguousSymbol);
    CHECK(code_of(">A\nAN\n>B\nAC\n") == ErrorCode::kAmbiguousSymbol);
    CHECK(code_of(">A\nMX\n>B\nLE\n") == ErrorCode::kAmbiguousSymbol);
  }

  TEST_CASE("ambiguity symbols become states on request") {
    CharacterMatrix m = fasta(">A\nA-\n>B\nAN\n", true);
    CHECK(m.alphabet(1).symbols() == std::vector<std::string>{"-", "N"});
  }

  TEST_CASE("protein letters that are nucleotide ambiguity codes are plain states") {
    CharacterMatrix m = fasta(">A\nMKR\n>B\nLEV\n");
    CHECK(m.alphabet(0).symbols() == std::vector<std::string>{"L", "M"});
  }

  TEST_CASE("more than 64 states in one character") {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 65; ++i) {
      names.push_back("s" + std::to_string(i));
      rows.push_back({"x" + std::to_string(i)});
    }
    CHECK_THROWS_AS(CharacterMatrix::from_rows(names, rows), Error);
    rows.pop_back();
    names.pop_back();
    CHECK(CharacterMatrix::from_rows(names, rows).alphabet(0).size() == 64);
  }

  TEST_CASE("column restriction") {
    CharacterMatrix m = fasta(">A\nACGT\n>B\nTCGA\n");
    CharacterMatrix r = restrict_columns(m, 2);
    CHECK(r.m() == 2);
    CHECK(r.alphabet(1).symbols() == std::vector<std::string>{"C"});
    CHECK_THROWS_AS(restrict_columns(m, 0), Error);
    CHECK_THROWS_AS(restrict_columns(m, 5), Error);
    CHECK(restrict_columns(m, 4) == m);
  }

  TEST_CASE("species subsets are seeded and keep input order") {
    CharacterMatrix m = random_matrix(10, 5, 3, 7);
    CharacterMatrix a = subsample_species(m, 4, 99);
    CharacterMatrix b = subsample_species(m, 4, 99);
    CHECK(a == b);
    CHECK(a.n() == 4);
    std::vector<std::size_t> positions;
    for (const auto& s : a.all_species()) positions.push_back(*m.find(s.name));
    CHECK(std::is_sorted(positions.begin(), positions.end()));
    CHECK(std::adjacent_find(positions.begin(), positions.end()) == positions.end());
    CHECK(subsample_species(m, 10, 3).n() == 10);
    CHECK_THROWS_AS(subsample_species(m, 11, 3), Error);
    CHECK_THROWS_AS(subsample_species(m, 0, 3), Error);
  }

  TEST_CASE("FASTA round trip") {
    CharacterMatrix m = random_matrix(6, 70, 4, 11);
    std::ostringstream out;
    write_fasta(m, out, 25);
    CHECK(fasta(out.str()) == m);
  }

  TEST_CASE("random data is reproducible") {
    CHECK(random_matrix(5, 8, 4, 1) == random_matrix(5, 8, 4, 1));
    CHECK_FALSE(random_matrix(5, 8, 4, 1) == random_matrix(5, 8, 4, 2));
  }
}
