#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tc/errors.hpp"
#include "tc/graph.hpp"
#include "tc/registry.hpp"

namespace tc::bench {

// Raised when two algorithms (or two runs of one) disagree on a graph.
class CountMismatchError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kCsv, kMarkdown, kJson };
OutputFormat parse_output_format(std::string_view name);

// How BFS roots are picked when reporting k.
enum class RootPolicy { kAscendingId, kDegreeDescending };
RootPolicy parse_root_policy(std::string_view name);

// A graph to benchmark. `source` is a file path (.txt/.el/.bin) or
// "rmat:SCALE:EDGE_FACTOR:SEED" with Graph500 probabilities.
struct GraphSource {
  std::string name;
  std::string source;
};

// Name used when none is given: "RMAT <scale>" or the file stem.
std::string default_graph_name(std::string_view source);
CsrGraph load_graph_source(std::string_view source);

struct BenchConfig {
  std::vector<GraphSource> graphs;
  std::vector<std::string> algorithms;  // registry keys
  int runs = 10;
  OutputFormat format = OutputFormat::kCsv;
  RootPolicy roots = RootPolicy::kAscendingId;
};

// Key-value text config, one "key = value" per line, '#' comments:
//   graph = tests/data/karate.txt        (name from the file stem)
//   graph.rmat8 = rmat:8:16:1            (explicit name)
//   algorithms = FH,Bader                (or "all")
//   runs = 10
//   format = csv | markdown | json
//   bfs_roots = ascending | degree
// Throws UsageError (with line number) on unknown keys or bad values.
BenchConfig parse_bench_config(std::istream& in);

struct BenchRecord {
  std::string graph;
  VertexId n = 0;
  EdgeIndex m = 0;
  TriangleCount triangles = 0;
  double k_pct = 0.0;
  std::string algorithm;
  int runs = 0;
  double mean_seconds = 0.0;
  double variance_seconds = 0.0;  // population variance of per_run_seconds
  std::vector<double> per_run_seconds;
};

struct NamedGraph {
  std::string name;
  CsrGraph graph;
};

// Percentage of horizontal edges under the BFS forest picked by `roots`.
double horizontal_percentage(const CsrGraph& g, RootPolicy roots);

// Times each algorithm `runs` times on each graph. Only the call itself is
// timed; it receives nothing but the CSR reference. Throws
// CountMismatchError on any disagreement, before any record is returned.
std::vector<BenchRecord> run_bench(std::span<const NamedGraph> graphs,
                                   std::span<const Algorithm> algorithms, int runs,
                                   RootPolicy roots = RootPolicy::kAscendingId);

// Loads every graph source (untimed) and runs the registry algorithms named in
// the config. Throws IoError for a missing file, UsageError for a bad key.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

// csv: one row per record. markdown: one row per graph, one column per
// algorithm. json: the records as an array. Seconds with 6 decimals in text
// formats, k with 1. Throws UsageError on an empty record list.
std::string emit_table(std::span<const BenchRecord> records, OutputFormat format);

}  // namespace tc::bench
