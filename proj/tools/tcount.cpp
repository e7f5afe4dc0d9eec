// tcount: triangle counting front end.
//
//   tcount count <graph> --algo KEY [--reorder]
//   tcount bench --graphs a.txt,rmat:10:16:1 --algos all --runs 10 --format csv
//   tcount gen-rmat --scale 8 --edge-factor 16 --seed 1 --out rmat8.bin
//   tcount info <graph>
//
// Exit codes: 0 ok, 1 I/O, 2 usage or config, 3 algorithms disagree.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tc/bench.hpp"
#include "tc/bfs_partition.hpp"
#include "tc/errors.hpp"
#include "tc/io.hpp"
#include "tc/registry.hpp"
#include "tc/rmat.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

tc::GraphFormat parse_input_format(const std::string& name) {
  if (name == "auto") return tc::GraphFormat::kAuto;
  if (name == "text") return tc::GraphFormat::kSnapText;
  if (name == "bin") return tc::GraphFormat::kBinaryCsr;
  throw tc::UsageError("unknown input format '" + name + "'");
}

std::string registry_listing() {
  std::ostringstream out;
  out << "available algorithms:\n";
  for (const auto& a : tc::registry()) out << "  " << a.key << "\t" << a.description << '\n';
  return out.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw tc::IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw tc::IoError("failed writing '" + path + "'");
}

struct CountArgs {
  std::string graph;
  std::string algo;
  bool reorder = false;
  std::string input_format = "auto";
};

int run_count(const CountArgs& args) {
  const tc::Algorithm* algo = tc::find_algorithm(args.algo);
  if (algo == nullptr) {
    std::cerr << "unknown algorithm '" << args.algo << "'\n" << registry_listing();
    return kExitUsage;
  }
  tc::CsrGraph g = tc::load_graph(args.graph, parse_input_format(args.input_format));
  if (args.reorder) g = tc::degree_order(g).first;
  std::cout << algo->count(g) << '\n';
  return 0;
}

struct BenchArgs {
  std::string graphs;
  std::string config;
  std::string algos = "all";
  int runs = 10;
  std::string format = "csv";
  std::string out;
  std::string roots = "ascending";
};

int run_bench_cmd(const BenchArgs& args, const CLI::App& sub) {
  tc::bench::BenchConfig cfg;
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) throw tc::IoError("cannot open config '" + args.config + "'");
    cfg = tc::bench::parse_bench_config(in);
  }
  // Flags given on the command line override the config file.
  if (!args.graphs.empty()) {
    cfg.graphs.clear();
    for (const auto& src : split_commas(args.graphs))
      cfg.graphs.push_back({tc::bench::default_graph_name(src), src});
  }
  if (cfg.graphs.empty()) throw tc::UsageError("bench needs --graphs or --config");
  if (args.config.empty() || sub.count("--algos") > 0) {
    cfg.algorithms.clear();
    for (const auto& a : tc::parse_algorithm_list(args.algos)) cfg.algorithms.push_back(a.key);
  }
  if (args.config.empty() || sub.count("--runs") > 0) cfg.runs = args.runs;
  if (args.config.empty() || sub.count("--format") > 0)
    cfg.format = tc::bench::parse_output_format(args.format);
  if (args.config.empty() || sub.count("--bfs-roots") > 0)
    cfg.roots = tc::bench::parse_root_policy(args.roots);
  if (cfg.runs < 1) throw tc::UsageError("--runs must be >= 1");

  const auto records = tc::bench::run_bench(cfg);
  write_output(tc::bench::emit_table(records, cfg.format), args.out);
  return 0;
}

struct GenArgs {
  int scale = 6;
  int edge_factor = 16;
  std::uint64_t seed = 1;
  std::string params;
  std::string out;
};

int run_gen(const GenArgs& args) {
  tc::RmatParams p;
  p.scale = args.scale;
  p.edge_factor = args.edge_factor;
  p.seed = args.seed;
  if (!args.params.empty()) {
    const auto parts = split_commas(args.params);
    if (parts.size() != 4) throw tc::UsageError("--params expects a,b,c,d");
    try {
      p.a = std::stod(parts[0]);
      p.b = std::stod(parts[1]);
      p.c = std::stod(parts[2]);
      p.d = std::stod(parts[3]);
    } catch (const std::exception&) {
      throw tc::UsageError("--params expects four numbers");
    }
  }
  const tc::EdgeList el = tc::rmat_generate(p);
  const auto format = tc::sniff_format(args.out);
  if (format == tc::GraphFormat::kBinaryCsr) {
    const tc::CsrGraph g = tc::build_csr(el);
    tc::save_graph(args.out, g, format);
    std::cout << "pairs=" << el.edges.size() << " n=" << g.num_vertices()
              << " m=" << g.num_edges() << '\n';
  } else {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw tc::IoError("cannot open '" + args.out + "' for writing");
    std::ostringstream header;
    header << "rmat scale=" << p.scale << " edge_factor=" << p.edge_factor << " seed=" << p.seed
           << " a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d
           << " pairs=" << el.edges.size();
    tc::write_snap_edge_list(out, el, header.str());
    if (!out) throw tc::IoError("failed writing '" + args.out + "'");
    std::cout << "pairs=" << el.edges.size() << " n=" << el.n_hint << '\n';
  }
  return 0;
}

struct InfoArgs {
  std::string graph;
  std::string input_format = "auto";
  std::string roots = "ascending";
};

int run_info(const InfoArgs& args) {
  const auto roots = tc::bench::parse_root_policy(args.roots);
  const tc::CsrGraph g = tc::load_graph(args.graph, parse_input_format(args.input_format));
  const auto stats = tc::graph_stats(g);
  char k[32];
  std::snprintf(k, sizeof(k), "%.1f", tc::bench::horizontal_percentage(g, roots));
  std::cout << "n=" << stats.n << " m=" << stats.m << " d_max=" << stats.max_degree
            << " k=" << k << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential triangle counting toolkit"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count triangles with one algorithm");
  count->add_option("graph", count_args.graph, "Graph file (.txt/.el/.bin)")->required();
  count->add_option("--algo", count_args.algo, "Algorithm key, e.g. FH or Bader")->required();
  count->add_flag("--reorder", count_args.reorder, "Relabel by non-increasing degree first");
  count->add_option("--input-format", count_args.input_format, "auto, text or bin");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time algorithms over graphs");
  bench->add_option("--graphs", bench_args.graphs,
                    "Comma-separated graph files or rmat:SCALE:EF:SEED sources");
  bench->add_option("--config", bench_args.config, "Key-value bench config file");
  bench->add_option("--algos", bench_args.algos, "Comma-separated keys or 'all'");
  bench->add_option("--runs", bench_args.runs, "Timed runs per algorithm");
  bench->add_option("--format", bench_args.format, "csv, markdown or json");
  bench->add_option("--out", bench_args.out, "Output file (default stdout)");
  bench->add_option("--bfs-roots", bench_args.roots, "ascending or degree (for k)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen-rmat", "Generate an RMAT graph");
  gen->add_option("--scale", gen_args.scale, "log2 of the vertex count")->required();
  gen->add_option("--edge-factor", gen_args.edge_factor, "Pairs per vertex");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--params", gen_args.params, "Quadrant probabilities a,b,c,d");
  gen->add_option("--out", gen_args.out, "Output .txt/.el (raw pairs) or .bin (CSR)")
      ->required();

  InfoArgs info_args;
  auto* info = app.add_subcommand("info", "Print n, m, d_max and k");
  info->add_option("graph", info_args.graph, "Graph file")->required();
  info->add_option("--input-format", info_args.input_format, "auto, text or bin");
  info->add_option("--bfs-roots", info_args.roots, "ascending or degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*bench) return run_bench_cmd(bench_args, *bench);
    if (*gen) return run_gen(gen_args);
    if (*info) return run_info(info_args);
  } catch (const tc::bench::CountMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const tc::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tc::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tc::Error& e) {
    // IoError, ParseError and FormatError all come from input files.
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
