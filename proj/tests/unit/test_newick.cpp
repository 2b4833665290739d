#include <set>

#include "doctest.h"
#include "parsicompact/canonical.hpp"
#include "parsicompact/error.hpp"
#include "parsicompact/newick.hpp"
#include "support.hpp"

using namespace parsicompact;

namespace {

const std::vector<std::string> kNames{"A", "B", "C", "D", "E", "F", "G", "H"};

ErrorCode parse_error(std::string_view text) {
  try {
    parse_newick(text, kNames);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIo;
}

}  // namespace

TEST_SUITE("newick") {
  TEST_CASE("quartet") {
    MixedTree t = parse_newick("((A,B),C,D);", kNames);
    CHECK(t.node_count() == 6);
    CHECK(t.unlabelled_count() == 2);
    CHECK(t.validate().empty());
  }

  TEST_CASE("internal labels, lengths, comments and quotes") {
    MixedTree t = parse_newick(" ( 'A':0.1 , B[x=1]:2 ) C : 3 ;", kNames);
    CHECK(t.node_count() == 3);
    CHECK(t.is_labelled(*t.node_of(2)));
    CHECK(t.degree(*t.node_of(2)) == 2);
  }

  TEST_CASE("single species") {
    MixedTree t = parse_newick("A;", kNames);
    CHECK(t.node_count() == 1);
  }

  TEST_CASE("errors") {
    CHECK(parse_error("((A,B),Z);") == ErrorCode::kUnknownSpecies);
    CHECK(parse_error("((A,B),A);") == ErrorCode::kDuplicateLabel);
    CHECK(parse_error("((A,B),C") == ErrorCode::kNewickParse);
    CHECK(parse_error("((A,B),,C);") == ErrorCode::kNewickParse);
    CHECK(parse_error("(A,B)C;D") == ErrorCode::kNewickParse);
    CHECK(parse_error("") == ErrorCode::kNewickParse);
  }

  TEST_CASE("round trip is exact and canonical") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = 1 + rng.below(8);
      MixedTree t = support::random_mixed_tree(n, rng);
      std::string text = write_newick(t, kNames);
      MixedTree back = parse_newick(text, kNames);
      CHECK(canonical_key(back) == canonical_key(t));
      CHECK(write_newick(back, kNames) == text);
    }
  }

  TEST_CASE("rooted writer follows the given root") {
    MixedTree t = parse_newick("((A,B),C,D);", kNames);
    std::string from_a = write_newick(t, kNames, *t.node_of(0));
    CHECK(from_a.back() == ';');
    CHECK(from_a.find(")A;") != std::string::npos);
    CHECK(canonical_key(parse_newick(from_a, kNames)) == canonical_key(t));
  }
}

TEST_SUITE("canonical") {
  TEST_CASE("three quartet topologies") {
    std::set<CanonicalKey> keys;
    for (const char* text : {"((A,B),(C,D));", "((A,C),(B,D));", "((A,D),(B,C));", "((B,A),(D,C));",
                             "(A,B,(C,D));", "((C,D),B,A);"}) {
      keys.insert(canonical_key(parse_newick(text, kNames)));
    }
    CHECK(keys.size() == 3);
  }

  TEST_CASE("key ignores node numbering") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      MixedTree t = support::random_mixed_tree(7, rng);
      std::vector<NodeId> perm = t.nodes();
      rng.shuffle(perm);
      std::vector<std::optional<SpeciesId>> labels(perm.size());
      std::vector<NodeId> where(t.capacity());
      for (std::size_t i = 0; i < perm.size(); ++i) {
        where[perm[i]] = static_cast<NodeId>(i);
        labels[i] = t.label(perm[i]);
      }
      std::vector<std::pair<NodeId, NodeId>> edges;
      for (const Edge& e : t.edges()) edges.push_back({where[e.v], where[e.u]});
      rng.shuffle(edges);
      MixedTree copy = tree_from_edges(labels, edges);
      CHECK(canonical_key(copy) == canonical_key(t));
    }
  }

  TEST_CASE("labels matter") {
    CHECK_FALSE(canonical_key(parse_newick("(A,B)C;", kNames)) == canonical_key(parse_newick("(A,C)B;", kNames)));
    CHECK_FALSE(canonical_key(parse_newick("(A,B,C);", kNames)) == canonical_key(parse_newick("(A,B)C;", kNames)));
  }

  TEST_CASE("centers") {
    MixedTree path = parse_newick("((A)B)C;", kNames);
    CHECK(tree_centers(path) == std::vector<NodeId>{*path.node_of(1)});
    MixedTree edge = parse_newick("(A)B;", kNames);
    CHECK(tree_centers(edge).size() == 2);
  }
}
