#include "parsicompact/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "parsicompact/contract.hpp"
#include "parsicompact/counting.hpp"
#include "parsicompact/error.hpp"
#include "parsicompact/newick.hpp"
#include "parsicompact/oracle.hpp"
#include "parsicompact/parsimony.hpp"
#include "parsicompact/search.hpp"

namespace parsicompact {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

std::string fmt(double value, const char* pattern = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

enum class Format { kNewick, kTsv, kJson };

struct RunConfig {
  std::string input;
  std::size_t columns = 0;
  std::size_t subset = 0;
  std::optional<std::uint64_t> seed;
  SpeciesOrder order = SpeciesOrder::kInput;
  unsigned threads = 0;
  Format format = Format::kNewick;
  bool no_prune = false;
  bool no_memo = false;
  bool oracle_check = false;
  bool allow_ambiguity = false;
  std::string tree;
  std::string tree_file;
  std::string trees_out;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t trials = 10;
  unsigned states = 4;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

CharacterMatrix load_matrix(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorCode::kInvalidArgument, "--input is required");
  CharacterMatrix matrix = parse_fasta_file(cfg.input, FastaOptions{cfg.allow_ambiguity});
  if (cfg.columns > 0) matrix = restrict_columns(matrix, cfg.columns);
  if (cfg.subset > 0) {
    if (!cfg.seed) throw Error(ErrorCode::kInvalidArgument, "--subset requires --seed");
    matrix = subsample_species(matrix, cfg.subset, *cfg.seed);
  }
  return matrix;
}

unsigned threads_of(const RunConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_threads(); }

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.prune = !cfg.no_prune;
  o.threads = threads_of(cfg);
  o.order = cfg.order;
  return o;
}

std::vector<std::string> newick_lines(const std::vector<const MixedTree*>& trees, const CharacterMatrix& matrix) {
  std::vector<std::string> out;
  for (const MixedTree* t : trees) out.push_back(write_newick(*t, matrix));
  return out;
}

void write_trees_file(const std::string& path, const std::vector<std::string>& lines) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + path);
  for (const auto& line : lines) file << line << '\n';
}

void emit_trees(std::ostream& out, const RunConfig& cfg, Json stats, const std::vector<const MixedTree*>& trees,
                const CharacterMatrix& matrix) {
  std::vector<std::string> lines = newick_lines(trees, matrix);
  write_trees_file(cfg.trees_out, lines);
  switch (cfg.format) {
    case Format::kNewick:
      for (const auto& line : lines) out << line << '\n';
      break;
    case Format::kTsv: {
      bool first = true;
      for (auto& [name, value] : stats.items()) {
        out << (first ? "" : "\t") << name;
        first = false;
      }
      out << '\n';
      first = true;
      for (auto& [name, value] : stats.items()) {
        out << (first ? "" : "\t") << (value.is_string() ? value.get<std::string>() : value.dump());
        first = false;
      }
      out << "\n\nnodes\tunlabelled\tnewick\n";
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out << trees[i]->node_count() << '\t' << trees[i]->unlabelled_count() << '\t' << lines[i] << '\n';
      }
      break;
    }
    case Format::kJson: {
      Json list = Json::array();
      for (std::size_t i = 0; i < trees.size(); ++i) {
        list.push_back({{"nodes", trees[i]->node_count()},
                        {"unlabelled", trees[i]->unlabelled_count()},
                        {"newick", lines[i]}});
      }
      stats["trees"] = std::move(list);
      out << stats.dump(2) << '\n';
      break;
    }
  }
}

int cmd_score(const RunConfig& cfg, std::ostream& out) {
  CharacterMatrix matrix = load_matrix(cfg);
  if (cfg.tree.empty() == cfg.tree_file.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --tree and --tree-file");
  }
  std::string text = cfg.tree.empty() ? read_file(cfg.tree_file) : cfg.tree;
  MixedTree tree = parse_newick(text, matrix);
  ScoreResult score = score_mixed_constrained(tree, matrix);
  Json stats;
  stats["mp_cost"] = score.mp_cost;
  stats["nodes"] = tree.node_count();
  stats["unlabelled"] = tree.unlabelled_count();
  if (cfg.oracle_check) {
    OracleResult oracle = brute_force_best_fit(tree, matrix);
    stats["oracle_mp_cost"] = oracle.mp_cost;
    if (oracle.mp_cost != score.mp_cost) {
      throw Error(ErrorCode::kInvalidArgument, "oracle cost " + std::to_string(oracle.mp_cost) +
                                                   " differs from " + std::to_string(score.mp_cost));
    }
  }
  switch (cfg.format) {
    case Format::kNewick:
      out << "[mp_cost=" << score.mp_cost << "] " << write_newick(tree, matrix) << '\n';
      break;
    case Format::kTsv: {
      bool first = true;
      for (auto& [name, value] : stats.items()) {
        out << (first ? "" : "\t") << name;
        first = false;
      }
      out << '\n';
      first = true;
      for (auto& [name, value] : stats.items()) {
        out << (first ? "" : "\t") << value.dump();
        first = false;
      }
      out << '\n';
      break;
    }
    case Format::kJson:
      stats["newick"] = write_newick(tree, matrix);
      out << stats.dump(2) << '\n';
      break;
  }
  return 0;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const std::size_t lo = cfg.n_min == 0 ? 1 : cfg.n_min;
  const std::size_t hi = cfg.n_max == 0 ? 12 : cfg.n_max;
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "--min-n exceeds --max-n");
  TreeCountTable table(hi);
  Json rows = Json::array();
  for (std::size_t n = lo; n <= hi; ++n) {
    BigInt total = table.total(n);
    std::string by_m;
    for (std::size_t m = 0; m + 2 <= std::max<std::size_t>(n, 2); ++m) {
      by_m += (m ? "," : "") + table.at(n, m).str();
    }
    Json row;
    row["n"] = n;
    row["total"] = total.str();
    row["cubic"] = count_cubic(n).str();
    if (n >= 2) {
      double estimate = closed_form_estimate(n);
      row["estimate"] = fmt(estimate);
      row["estimate_ratio"] = fmt(estimate / total.convert_to<double>(), "%.4f");
    } else {
      row["estimate"] = "NA";
      row["estimate_ratio"] = "NA";
    }
    row["by_unlabelled"] = by_m;
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::kJson) {
    out << rows.dump(2) << '\n';
    return 0;
  }
  out << "n\ttotal\tcubic\testimate\testimate_ratio\tby_unlabelled\n";
  for (const auto& row : rows) {
    out << row["n"].get<std::size_t>() << '\t' << row["total"].get<std::string>() << '\t'
        << row["cubic"].get<std::string>() << '\t' << row["estimate"].get<std::string>() << '\t'
        << row["estimate_ratio"].get<std::string>() << '\t' << row["by_unlabelled"].get<std::string>() << '\n';
  }
  return 0;
}

Json search_stats(const SearchRecord& r) {
  Json stats;
  stats["mp_cost"] = r.incumbent_cost;
  stats["nodes"] = r.incumbent_nodes;
  stats["tree_count"] = r.incumbents.size();
  stats["visited"] = r.visited;
  stats["pruned"] = r.pruned;
  stats["complete_trees"] = r.complete_trees;
  return stats;
}

int cmd_search(const RunConfig& cfg, bool mixed, std::ostream& out) {
  CharacterMatrix matrix = load_matrix(cfg);
  SearchRecord record = mixed ? enumerate_mixed(matrix, search_options(cfg)) : enumerate_cubic(matrix, search_options(cfg));
  std::vector<const MixedTree*> trees;
  for (const auto& inc : record.incumbents) trees.push_back(&inc.tree);
  emit_trees(out, cfg, search_stats(record), trees, matrix);
  return 0;
}

int cmd_compact(const RunConfig& cfg, std::ostream& out) {
  CharacterMatrix matrix = load_matrix(cfg);
  PipelineOptions options;
  options.search = search_options(cfg);
  options.compact.memo = !cfg.no_memo;
  options.compact.oracle_check = cfg.oracle_check;
  PipelineResult result = most_compact_pipeline(matrix, options);
  if (result.compact.oracle_mismatches > 0) {
    throw Error(ErrorCode::kIllegalContraction, std::to_string(result.compact.oracle_mismatches) +
                                                    " contractions disagreed with a full rescore");
  }
  Json stats;
  stats["mp_cost"] = result.compact.mp_cost;
  stats["nodes"] = result.compact.best_node_count;
  stats["tree_count"] = result.compact.trees.size();
  stats["cubic_mp_trees"] = result.cubic.incumbents.size();
  stats["contracted_cubic_mp_trees_raw"] = result.raw_compact_trees;
  stats["mean_contractions"] = fmt(result.mean_contractions);
  stats["explored_states"] = result.compact.explored_states;
  if (cfg.oracle_check) stats["oracle_checks"] = result.compact.oracle_checks;
  std::vector<const MixedTree*> trees;
  for (const auto& [key, tree] : result.compact.trees) trees.push_back(&tree);
  emit_trees(out, cfg, stats, trees, matrix);
  return 0;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t lo = cfg.n_min == 0 ? 4 : cfg.n_min;
  const std::size_t hi = cfg.n_max == 0 ? 8 : cfg.n_max;
  if (lo > hi || lo < 3) throw Error(ErrorCode::kInvalidArgument, "need 3 <= --min-n <= --max-n");
  if (cfg.trials == 0) throw Error(ErrorCode::kInvalidArgument, "--trials must be positive");
  std::optional<CharacterMatrix> source;
  if (!cfg.input.empty()) {
    if (!cfg.seed) throw Error(ErrorCode::kInvalidArgument, "--input with bench samples species and requires --seed");
    source = parse_fasta_file(cfg.input, FastaOptions{cfg.allow_ambiguity});
    if (cfg.columns > 0) source = restrict_columns(*source, cfg.columns);
  }
  const std::uint64_t seed = cfg.seed.value_or(1);
  const std::size_t columns = cfg.columns > 0 ? cfg.columns : 30;
  Json rows = Json::array();
  std::vector<BenchRow> means;
  std::vector<double> speedups;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<BenchRow> trials;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t trial_seed = seed * 1000003 + n * 1009 + t;
      CharacterMatrix matrix = source ? subsample_species(*source, n, trial_seed)
                                      : random_matrix(n, columns, cfg.states, trial_seed);
      BenchRow row = bench_trial(matrix, threads_of(cfg), cfg.order);
      if (!row.agree) {
        throw Error(ErrorCode::kInvalidArgument,
                    "pipelines disagree for n=" + std::to_string(n) + " trial " + std::to_string(t));
      }
      trials.push_back(row);
    }
    BenchRow mean = average_rows(trials);
    means.push_back(mean);
    speedups.push_back(mean.cteeca_time_ms > 0 ? mean.mtea_time_ms / mean.cteeca_time_ms : 0.0);
  }
  if (cfg.format == Format::kJson) {
    for (std::size_t k = 0; k < means.size(); ++k) {
      const BenchRow& r = means[k];
      rows.push_back({{"n", r.n},
                      {"mtea_time_ms", r.mtea_time_ms},
                      {"cteeca_time_ms", r.cteeca_time_ms},
                      {"compact_mixed_mp_trees", r.compact_mixed_mp_trees},
                      {"cubic_mp_trees", r.cubic_mp_trees},
                      {"contracted_cubic_mp_trees_raw", r.contracted_cubic_mp_trees_raw},
                      {"contracted_cubic_mp_trees_dedup", r.contracted_cubic_mp_trees_dedup},
                      {"mean_contractions", r.mean_contractions},
                      {"mp_cost", r.mp_cost},
                      {"speedup", speedups[k]}});
    }
    out << rows.dump(2) << '\n';
    return 0;
  }
  for (std::size_t c = 0; c < std::size(kBenchColumns); ++c) out << (c ? "\t" : "") << kBenchColumns[c];
  out << '\n';
  for (std::size_t k = 0; k < means.size(); ++k) {
    const BenchRow& r = means[k];
    out << r.n << '\t' << fmt(r.mtea_time_ms, "%.3f") << '\t' << fmt(r.cteeca_time_ms, "%.3f") << '\t'
        << fmt(r.compact_mixed_mp_trees) << '\t' << fmt(r.cubic_mp_trees) << '\t'
        << fmt(r.contracted_cubic_mp_trees_raw) << '\t' << fmt(r.contracted_cubic_mp_trees_dedup) << '\t'
        << fmt(r.mean_contractions) << '\t' << fmt(r.mp_cost) << '\n';
    err << "speedup n=" << r.n << ": " << fmt(speedups[k], "%.2f") << "x\n";
  }
  return 0;
}

void add_matrix_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "FASTA file of aligned species");
  cmd->add_option("--columns", cfg.columns, "Keep only the first k characters")->check(CLI::PositiveNumber);
  cmd->add_option("--subset", cfg.subset, "Sample this many species (needs --seed)")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for species sampling and random data");
  cmd->add_flag("--allow-ambiguity", cfg.allow_ambiguity, "Treat gap and ambiguity symbols as ordinary states");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  static const std::map<std::string, Format> formats{
      {"newick", Format::kNewick}, {"tsv", Format::kTsv}, {"json", Format::kJson}};
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_search_options(CLI::App* cmd, RunConfig& cfg) {
  static const std::map<std::string, SpeciesOrder> orders{{"input", SpeciesOrder::kInput},
                                                          {"diverse", SpeciesOrder::kDiverse}};
  cmd->add_option("--threads", cfg.threads, "Worker threads (default: PARSICOMPACT_THREADS or all cores)");
  cmd->add_option("--order", cfg.order, "Species insertion order")
      ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("PARSICOMPACT_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

BenchRow bench_trial(const CharacterMatrix& matrix, unsigned threads, SpeciesOrder order) {
  SearchOptions search;
  search.threads = threads;
  search.order = order;
  PipelineOptions pipeline;
  pipeline.search = search;

  auto t0 = Clock::now();
  SearchRecord mixed = enumerate_mixed(matrix, search);
  auto t1 = Clock::now();
  PipelineResult compact = most_compact_pipeline(matrix, pipeline);
  auto t2 = Clock::now();

  BenchRow row;
  row.n = matrix.n();
  row.mtea_time_ms = elapsed_ms(t0, t1);
  row.cteeca_time_ms = elapsed_ms(t1, t2);
  row.compact_mixed_mp_trees = static_cast<double>(mixed.incumbents.size());
  row.cubic_mp_trees = static_cast<double>(compact.cubic.incumbents.size());
  row.contracted_cubic_mp_trees_raw = static_cast<double>(compact.raw_compact_trees);
  row.contracted_cubic_mp_trees_dedup = static_cast<double>(compact.compact.trees.size());
  row.mean_contractions = compact.mean_contractions;
  row.mp_cost = compact.compact.mp_cost;
  row.agree = mixed.incumbent_cost == compact.compact.mp_cost &&
              mixed.incumbents.size() == compact.compact.trees.size();
  auto it = compact.compact.trees.begin();
  for (std::size_t i = 0; row.agree && i < mixed.incumbents.size(); ++i, ++it) {
    row.agree = mixed.incumbents[i].key == it->first;
  }
  return row;
}

BenchRow average_rows(std::span<const BenchRow> rows) {
  BenchRow mean;
  if (rows.empty()) return mean;
  mean.n = rows.front().n;
  for (const BenchRow& r : rows) {
    mean.mtea_time_ms += r.mtea_time_ms;
    mean.cteeca_time_ms += r.cteeca_time_ms;
    mean.compact_mixed_mp_trees += r.compact_mixed_mp_trees;
    mean.cubic_mp_trees += r.cubic_mp_trees;
    mean.contracted_cubic_mp_trees_raw += r.contracted_cubic_mp_trees_raw;
    mean.contracted_cubic_mp_trees_dedup += r.contracted_cubic_mp_trees_dedup;
    mean.mean_contractions += r.mean_contractions;
    mean.mp_cost += r.mp_cost;
    mean.agree = mean.agree && r.agree;
  }
  const double k = static_cast<double>(rows.size());
  mean.mtea_time_ms /= k;
  mean.cteeca_time_ms /= k;
  mean.compact_mixed_mp_trees /= k;
  mean.cubic_mp_trees /= k;
  mean.contracted_cubic_mp_trees_raw /= k;
  mean.contracted_cubic_mp_trees_dedup /= k;
  mean.mean_contractions /= k;
  mean.mp_cost /= k;
  return mean;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Most compact maximum-parsimony trees with live internal species", "parsicompact"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* score = app.add_subcommand("score", "MP-cost of a given tree (internal labels allowed)");
  add_matrix_options(score, cfg);
  add_output_options(score, cfg);
  score->add_option("--tree", cfg.tree, "Newick text");
  score->add_option("--tree-file", cfg.tree_file, "File holding one Newick tree");
  score->add_flag("--oracle-check", cfg.oracle_check, "Also solve by exhaustive search and compare");

  CLI::App* count = app.add_subcommand("count", "Numbers of mixed and cubic trees per species count");
  add_output_options(count, cfg);
  count->add_option("--min-n", cfg.n_min, "Smallest n (default 1)");
  count->add_option("--max-n", cfg.n_max, "Largest n (default 12)");

  CLI::App* cubic = app.add_subcommand("search-cubic", "Branch-and-bound over cubic leaf-labelled trees");
  CLI::App* mixed = app.add_subcommand("search-mixed", "Branch-and-bound over all mixed trees");
  for (CLI::App* cmd : {cubic, mixed}) {
    add_matrix_options(cmd, cfg);
    add_output_options(cmd, cfg);
    add_search_options(cmd, cfg);
    cmd->add_flag("--no-prune", cfg.no_prune, "Enumerate every tree");
    cmd->add_option("--trees-out", cfg.trees_out, "Also write the trees as Newick to this file");
  }

  CLI::App* compact = app.add_subcommand("compact", "Cubic MP-trees contracted to the most compact mixed trees");
  add_matrix_options(compact, cfg);
  add_output_options(compact, cfg);
  add_search_options(compact, cfg);
  compact->add_flag("--no-prune", cfg.no_prune, "Enumerate every cubic tree");
  compact->add_flag("--no-memo", cfg.no_memo, "Re-expand repeated intermediate trees");
  compact->add_flag("--oracle-check", cfg.oracle_check, "Rescore after every contraction");
  compact->add_option("--trees-out", cfg.trees_out, "Also write the trees as Newick to this file");

  CLI::App* bench = app.add_subcommand("bench", "Time both pipelines over a range of n");
  add_matrix_options(bench, cfg);
  add_output_options(bench, cfg);
  add_search_options(bench, cfg);
  bench->add_option("--min-n", cfg.n_min, "Smallest n (default 4)");
  bench->add_option("--max-n", cfg.n_max, "Largest n (default 8)");
  bench->add_option("--trials", cfg.trials, "Trials per n (default 10)");
  bench->add_option("--states", cfg.states, "States per character of random data (default 4)")
      ->check(CLI::Range(1U, 30U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (score->parsed()) return cmd_score(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (cubic->parsed()) return cmd_search(cfg, false, out);
    if (mixed->parsed()) return cmd_search(cfg, true, out);
    if (compact->parsed()) return cmd_compact(cfg, out);
    return cmd_bench(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"parsicompact"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace parsicompact
