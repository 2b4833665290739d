#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "parsicompact/cli.hpp"
#include "parsicompact/newick.hpp"
#include "support.hpp"

using namespace parsicompact;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("parsicompact_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kData = std::string(PARSICOMPACT_TEST_DATA) + "/synthetic_35.fasta";

const char* kQuartet = ">a\nACGT\n>b\nACGA\n>c\nTCGA\n>d\nTCCA\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count prints the tree numbers") {
    Run r = run({"count", "--max-n", "5"});
    REQUIRE(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n\ttotal\tcubic\testimate\testimate_ratio\tby_unlabelled");
    CHECK(lines[1].rfind("1\t1\t", 0) == 0);
    CHECK(lines[2].rfind("2\t1\t", 0) == 0);
    CHECK(lines[3].rfind("3\t4\t1\t", 0) == 0);
    CHECK(lines[4].rfind("4\t32\t3\t", 0) == 0);
    CHECK(lines[5].rfind("5\t396\t15\t", 0) == 0);
  }

  TEST_CASE("score reports the MP-cost of a given tree") {
    std::string fasta = write_temp("quartet.fa", kQuartet);
    Run r = run({"score", "-i", fasta, "--tree", "((a,b),(c,d));"});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("[mp_cost=3] ", 0) == 0);

    Run labelled = run({"score", "-i", fasta, "--tree", "(a,c)b;", "--oracle-check", "--format", "json"});
    REQUIRE(labelled.status == 0);
    auto doc = nlohmann::json::parse(labelled.out);
    CHECK(doc["mp_cost"] == 2);
    CHECK(doc["oracle_mp_cost"] == 2);
  }

  TEST_CASE("errors give a one-line message and a non-zero status") {
    std::string fasta = write_temp("quartet_err.fa", kQuartet);
    Run unknown = run({"score", "-i", fasta, "--tree", "((a,b),(c,x));"});
    CHECK(unknown.status != 0);
    CHECK(unknown.err.rfind("error: ", 0) == 0);
    CHECK(lines_of(unknown.err).size() == 1);

    Run missing = run({"search-mixed", "-i", "/nonexistent/file.fa"});
    CHECK(missing.status != 0);
    CHECK(missing.err.rfind("error: ", 0) == 0);

    Run no_seed = run({"compact", "-i", kData, "--subset", "5"});
    CHECK(no_seed.status != 0);
    CHECK(no_seed.err.find("--seed") != std::string::npos);

    Run few = run({"search-cubic", "-i", write_temp("pair.fa", ">a\nA\n>b\nC\n")});
    CHECK(few.status != 0);

    Run bad_flag = run({"compact", "--bogus"});
    CHECK(bad_flag.status != 0);
  }

  TEST_CASE("identical sequences compact to trees without unlabelled nodes") {
    std::string fasta = write_temp("same.fa", ">a\nACG\n>b\nACG\n>c\nACG\n>d\nACG\n>e\nACG\n");
    Run r = run({"compact", "-i", fasta, "--format", "json"});
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["mp_cost"] == 0);
    CHECK(doc["nodes"] == 5);
    CHECK(doc["tree_count"] == 125);
    for (const auto& t : doc["trees"]) CHECK(t["unlabelled"] == 0);
  }

  TEST_CASE("compact and search-mixed print the same trees") {
    for (const char* seed : {"1", "2", "3"}) {
      std::vector<std::string> common{"-i", kData, "--columns", "30", "--subset", "6", "--seed", seed};
      std::vector<std::string> a{"compact"};
      std::vector<std::string> b{"search-mixed"};
      a.insert(a.end(), common.begin(), common.end());
      b.insert(b.end(), common.begin(), common.end());
      Run ra = run(a);
      Run rb = run(b);
      REQUIRE(ra.status == 0);
      REQUIRE(rb.status == 0);
      CHECK(ra.out == rb.out);
      CHECK_FALSE(ra.out.empty());
    }
  }

  TEST_CASE("json output is deterministic across thread counts") {
    std::vector<std::string> args{"compact", "-i", kData, "--columns", "30", "--subset", "7",
                                  "--seed", "4", "--format", "json", "--threads", "1"};
    Run one = run(args);
    args.back() = "3";
    Run three = run(args);
    REQUIRE(one.status == 0);
    CHECK(one.out == three.out);
    auto doc = nlohmann::json::parse(one.out);
    CHECK(doc["tree_count"] == doc["trees"].size());
  }

  TEST_CASE("printed trees rescore to the reported cost") {
    std::string trees = (std::filesystem::temp_directory_path() / "parsicompact_test_trees.nwk").string();
    Run r = run({"search-mixed", "-i", kData, "--columns", "20", "--subset", "6", "--seed", "9", "--format",
                 "json", "--trees-out", trees, "--order", "diverse"});
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CharacterMatrix full = parse_fasta_file(kData);
    CharacterMatrix m = subsample_species(restrict_columns(full, 20), 6, 9);
    std::ifstream in(trees);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line); ++count) {
      MixedTree t = parse_newick(line, m);
      CHECK(support::sankoff_cost(t, m) == doc["mp_cost"].get<int>());
      CHECK(t.node_count() == doc["nodes"].get<std::size_t>());
      CHECK(line == doc["trees"][count]["newick"].get<std::string>());
    }
    CHECK(count == doc["tree_count"].get<std::size_t>());
  }

  TEST_CASE("search-cubic tsv lists every tree") {
    Run r = run({"search-cubic", "-i", kData, "--columns", "30", "--subset", "6", "--seed", "2", "--format", "tsv",
                 "--no-prune"});
    REQUIRE(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0].rfind("mp_cost\tnodes\ttree_count\tvisited\tpruned\tcomplete_trees", 0) == 0);
    CHECK(lines[1].find("\t105") != std::string::npos);
    CHECK(lines[3] == "nodes\tunlabelled\tnewick");
    for (std::size_t i = 4; i < lines.size(); ++i) CHECK(lines[i].rfind("10\t4\t", 0) == 0);
  }

  TEST_CASE("bench prints one averaged row per n") {
    Run r = run({"bench", "--min-n", "4", "--max-n", "5", "--trials", "2", "--columns", "8", "--seed", "3"});
    REQUIRE(r.status == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "n\tmtea_time_ms\tcteeca_time_ms\tcompact_mixed_mp_trees\tcubic_mp_trees\tcontracted_cubic_mp_trees_raw\t"
          "contracted_cubic_mp_trees_dedup\tmean_contractions\tmp_cost");
    CHECK(lines[1].rfind("4\t", 0) == 0);
    CHECK(lines[2].rfind("5\t", 0) == 0);
    CHECK(r.err.find("speedup n=4") != std::string::npos);

    Run sampled = run({"bench", "-i", kData, "--columns", "30", "--min-n", "4", "--max-n", "4", "--trials", "2",
                       "--seed", "1", "--format", "json"});
    REQUIRE(sampled.status == 0);
    auto doc = nlohmann::json::parse(sampled.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["n"] == 4);
    CHECK(doc[0].contains("speedup"));
  }

  TEST_CASE("the installed tool exits non-zero on bad input") {
    std::string cmd = std::string(PARSICOMPACT_TOOL) + " score -i /nonexistent.fa --tree '(a,b);' 2>/dev/null";
    CHECK(std::system(cmd.c_str()) != 0);
    std::string ok = std::string(PARSICOMPACT_TOOL) + " count --max-n 3 >/dev/null";
    CHECK(std::system(ok.c_str()) == 0);
  }
}
