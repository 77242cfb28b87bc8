#include "lpp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpp/generators.hpp"
#include "lpp/lpp_core.hpp"
#include "lpp/oracle.hpp"
#include "lpp/paths.hpp"

namespace lpp {

namespace {

struct CliConfig {
  std::string input = "-";
  std::string format = "text";
  int epsilon = 1;
  std::size_t cap = 1'000'000;
  std::uint64_t seed = 1;
  // gen
  std::string gen_class;
  int gen_n = 10;
  double gen_p = 0.5;
  std::vector<int> gen_orders;
  int gen_blocks = 0;
  int gen_order = 0;
  std::string out_path;
  // bench
  std::vector<int> bench_sizes{256, 512, 1024};
};

Graph load_graph(const CliConfig& cfg, std::istream& in) {
  if (cfg.input == "-") return parse_graph(in);
  std::ifstream f(cfg.input);
  if (!f) throw ParseError("cannot open input file: " + cfg.input);
  return parse_graph(f);
}

LppResult length_for(const Graph& g, GraphClass c, int epsilon) {
  switch (c) {
    case GraphClass::Tree:
      return tree_diameter(g, epsilon);
    case GraphClass::Dag:
      return dag_longest_length(g, epsilon);
    case GraphClass::UniformBlockGraph:
    case GraphClass::CompleteGraph:
      return uniform_block_lp(g, epsilon);
    case GraphClass::BlockGraph:
      return block_lp(g, epsilon);
    default:
      throw ClassError("unsupported graph class: " + to_string(c));
  }
}

PathSet paths_for(const Graph& g, GraphClass c, std::size_t cap) {
  switch (c) {
    case GraphClass::Tree:
      return tree_all_longest_paths(g);
    case GraphClass::Dag:
      return dag_all_longest_paths(g);
    case GraphClass::UniformBlockGraph:
    case GraphClass::BlockGraph:
    case GraphClass::CompleteGraph:
      return block_all_longest_paths(g, cap);
    default:
      throw ClassError("unsupported graph class: " + to_string(c));
  }
}

void print_length(const LppResult& r, const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    nlohmann::json j;
    j["class"] = to_string(r.graph_class);
    if (r.interval)
      j["interval"] = {r.interval->first, r.interval->second};
    else
      j["length"] = r.length;
    if (r.chain_length) j["chain_length"] = *r.chain_length;
    out << j.dump() << '\n';
    return;
  }
  out << "class=" << to_string(r.graph_class);
  if (r.interval)
    out << " lo=" << r.interval->first << " hi=" << r.interval->second;
  else
    out << " length=" << r.length;
  if (r.chain_length) out << " chain=" << *r.chain_length;
  out << '\n';
}

int run_classify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const GraphClass c = classify(g);
  if (cfg.format == "json")
    out << nlohmann::json{{"class", to_string(c)}}.dump() << '\n';
  else
    out << "class=" << to_string(c) << '\n';
  return kExitOk;
}

int run_length(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  print_length(length_for(g, classify(g), cfg.epsilon), cfg, out);
  return kExitOk;
}

int run_paths(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const PathSet ps = paths_for(g, classify(g), cfg.cap);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["class"] = to_string(classify(g));
    j["length"] = static_cast<int>(ps.paths.front().size()) - 1;
    j["count"] = ps.count();
    j["paths"] = ps.paths;
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const Path& p : ps.paths) {
    for (std::size_t t = 0; t < p.size(); ++t)
      out << (t ? " " : "") << p[t];
    out << '\n';
  }
  return kExitOk;
}

int run_count(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const GraphClass c = classify(g);
  std::uint64_t count = 0;
  switch (c) {
    case GraphClass::Tree:
      count = tree_all_longest_paths(g).count();
      break;
    case GraphClass::Dag:
      count = dag_all_longest_paths(g).count();
      break;
    case GraphClass::UniformBlockGraph:
    case GraphClass::BlockGraph:
    case GraphClass::CompleteGraph:
      count = count_block_longest_paths(g);
      break;
    default:
      throw ClassError("unsupported graph class: " + to_string(c));
  }
  if (cfg.format == "json")
    out << nlohmann::json{{"class", to_string(c)}, {"count", count}}.dump()
        << '\n';
  else
    out << count << '\n';
  return kExitOk;
}

int run_chains(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const auto chains = generate_all_longest_chains(g);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["class"] = to_string(classify(g));
    j["chains"] = nlohmann::json::array();
    for (const Chain& ch : chains) j["chains"].push_back(ch.blocks);
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const Chain& ch : chains) {
    for (std::size_t b = 0; b < ch.blocks.size(); ++b) {
      if (b) out << " -> ";
      for (std::size_t t = 0; t < ch.blocks[b].size(); ++t)
        out << (t ? "," : "") << ch.blocks[b][t];
    }
    out << '\n';
  }
  return kExitOk;
}

int run_oracle_check(const CliConfig& cfg, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  const Graph g = load_graph(cfg, in);
  const GraphClass c = classify(g);
  const LppResult algebraic = length_for(g, c, 1);
  const OracleReport report = oracle_longest(g);
  if (algebraic.length != report.length) {
    err << "oracle mismatch: length " << algebraic.length << " vs "
        << report.length << '\n';
    return kExitOracleMismatch;
  }
  const PathSet mine = paths_for(g, c, cfg.cap);
  if (!(mine == report.paths)) {
    err << "oracle mismatch: " << mine.count() << " paths vs "
        << report.paths.count() << '\n';
    return kExitOracleMismatch;
  }
  if (cfg.format == "json")
    out << nlohmann::json{{"class", to_string(c)},
                          {"length", algebraic.length},
                          {"count", mine.count()},
                          {"ok", true}}
               .dump()
        << '\n';
  else
    out << "ok class=" << to_string(c) << " length=" << algebraic.length
        << " paths=" << mine.count() << '\n';
  return kExitOk;
}

int run_gen(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Graph g = [&] {
    if (cfg.gen_class == "tree") return gen_tree(cfg.gen_n, cfg.seed);
    if (cfg.gen_class == "dag")
      return gen_dag(cfg.gen_n, cfg.gen_p, cfg.seed);
    // block: explicit orders, or blocks x order shorthand
    std::vector<int> orders = cfg.gen_orders;
    if (orders.empty() && cfg.gen_blocks > 0 && cfg.gen_order > 0)
      orders.assign(static_cast<std::size_t>(cfg.gen_blocks), cfg.gen_order);
    if (orders.empty())
      throw Error("block generation needs --orders or --blocks with --order");
    return gen_block_graph(orders, cfg.seed);
  }();
  if (cfg.out_path.empty()) {
    write_graph(out, g);
    return kExitOk;
  }
  std::ofstream f(cfg.out_path);
  if (!f) {
    err << "error: cannot open output file: " << cfg.out_path << '\n';
    return kExitUsage;
  }
  write_graph(f, g);
  return kExitOk;
}

BitMatrix random_dense(std::size_t n, std::mt19937_64& eng) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j % 64 == 0) word = eng();
      if ((word >> (j % 64)) & 1u) m.set(i, j);
    }
  }
  return m;
}

int run_bench(const CliConfig& cfg, std::ostream& out) {
  std::mt19937_64 eng(cfg.seed);
  for (int n : cfg.bench_sizes) {
    const BitMatrix x = random_dense(static_cast<std::size_t>(n), eng);
    const BitMatrix y = random_dense(static_cast<std::size_t>(n), eng);
    double best = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const BitMatrix r = bool_product(x, y);
      const auto stop = std::chrono::steady_clock::now();
      const double secs = std::chrono::duration<double>(stop - start).count();
      if (rep == 0 || secs < best) best = secs;
      if (r.dim() != x.dim()) return kExitUsage;  // keep the product alive
    }
    out << n << ' ' << std::fixed << std::setprecision(6) << best << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"longest paths via booleanized adjacency powers", "lpp"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_input = [&](CLI::App* sc) {
    sc->add_option("input", cfg.input, "graph file, or - for stdin");
    sc->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "print the graph class");
  add_input(classify_cmd);

  CLI::App* length_cmd =
      app.add_subcommand("length", "longest path length (interval when --epsilon > 1)");
  add_input(length_cmd);
  length_cmd->add_option("--epsilon", cfg.epsilon, "early-stop slack")
      ->check(CLI::PositiveNumber);

  CLI::App* paths_cmd = app.add_subcommand("paths", "list all longest paths");
  add_input(paths_cmd);
  paths_cmd->add_option("--cap", cfg.cap, "refuse enumerations above this size")
      ->check(CLI::PositiveNumber);

  CLI::App* count_cmd = app.add_subcommand("count", "count all longest paths");
  add_input(count_cmd);

  CLI::App* chains_cmd = app.add_subcommand("chains", "list longest block chains");
  add_input(chains_cmd);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "re-derive the answer by brute force and compare");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--cap", cfg.cap, "enumeration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--class", cfg.gen_class, "tree, dag, or block")
      ->required()
      ->check(CLI::IsMember({"tree", "dag", "block"}));
  gen_cmd->add_option("--n", cfg.gen_n, "vertex count (tree, dag)");
  gen_cmd->add_option("--p", cfg.gen_p, "dag edge probability in [0, 1]");
  gen_cmd->add_option("--orders", cfg.gen_orders, "block orders, e.g. 3,4,3")
      ->delimiter(',');
  gen_cmd->add_option("--blocks", cfg.gen_blocks, "number of equal blocks");
  gen_cmd->add_option("--order", cfg.gen_order, "order of each block");
  gen_cmd->add_option("--seed", cfg.seed, "generator seed");
  gen_cmd->add_option("--out", cfg.out_path, "write here instead of stdout");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time bool_product on random dense matrices");
  bench_cmd->add_option("--sizes", cfg.bench_sizes, "matrix sizes")
      ->delimiter(',');
  bench_cmd->add_option("--seed", cfg.seed, "fill seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(cfg, in, out);
    if (length_cmd->parsed()) return run_length(cfg, in, out);
    if (paths_cmd->parsed()) return run_paths(cfg, in, out);
    if (count_cmd->parsed()) return run_count(cfg, in, out);
    if (chains_cmd->parsed()) return run_chains(cfg, in, out);
    if (oracle_cmd->parsed()) return run_oracle_check(cfg, in, out, err);
    if (gen_cmd->parsed()) return run_gen(cfg, out, err);
    if (bench_cmd->parsed()) return run_bench(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ClassError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnsupportedClass;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lpp
