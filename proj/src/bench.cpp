#include "tc/bench.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tc/bfs_partition.hpp"
#include "tc/io.hpp"
#include "tc/rmat.hpp"

namespace tc::bench {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

bool parse_rmat_source(std::string_view source, RmatParams& p) {
  constexpr std::string_view kPrefix = "rmat:";
  if (!source.starts_with(kPrefix)) return false;
  std::string_view rest = source.substr(kPrefix.size());
  std::vector<std::string_view> fields;
  while (true) {
    auto colon = rest.find(':');
    fields.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (fields.size() != 3 || !parse_number(fields[0], p.scale) ||
      !parse_number(fields[1], p.edge_factor) || !parse_number(fields[2], p.seed))
    throw UsageError("bad rmat source '" + std::string(source) +
                     "'; expected rmat:SCALE:EDGE_FACTOR:SEED");
  return true;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown output format '" + std::string(name) +
                   "'; expected csv, markdown or json");
}

RootPolicy parse_root_policy(std::string_view name) {
  if (name == "ascending") return RootPolicy::kAscendingId;
  if (name == "degree") return RootPolicy::kDegreeDescending;
  throw UsageError("unknown BFS root policy '" + std::string(name) +
                   "'; expected ascending or degree");
}

std::string default_graph_name(std::string_view source) {
  RmatParams p;
  if (parse_rmat_source(source, p)) return "RMAT " + std::to_string(p.scale);
  return std::filesystem::path(source).stem().string();
}

CsrGraph load_graph_source(std::string_view source) {
  RmatParams p;
  if (parse_rmat_source(source, p)) return build_csr(rmat_generate(p));
  return load_graph(std::filesystem::path(source));
}

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  bool have_algorithms = false;
  auto fail = [&](const std::string& msg) {
    throw UsageError("config line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    // '#' opens a comment at line start or after whitespace.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(text[i - 1])))) {
        text = text.substr(0, i);
        break;
      }
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (value.empty()) fail("empty value for '" + std::string(key) + "'");

    if (key == "graph") {
      cfg.graphs.push_back({default_graph_name(value), std::string(value)});
    } else if (key.starts_with("graph.")) {
      cfg.graphs.push_back({std::string(key.substr(6)), std::string(value)});
    } else if (key == "algorithms") {
      try {
        for (const auto& a : parse_algorithm_list(value)) cfg.algorithms.push_back(a.key);
      } catch (const UsageError& e) {
        fail(e.what());
      }
      have_algorithms = true;
    } else if (key == "runs") {
      if (!parse_number(value, cfg.runs) || cfg.runs < 1) fail("runs must be a positive integer");
    } else if (key == "format") {
      try {
        cfg.format = parse_output_format(value);
      } catch (const UsageError& e) {
        fail(e.what());
      }
    } else if (key == "bfs_roots") {
      try {
        cfg.roots = parse_root_policy(value);
      } catch (const UsageError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.graphs.empty()) throw UsageError("config names no graphs");
  if (!have_algorithms) {
    for (const auto& a : registry()) cfg.algorithms.push_back(a.key);
  }
  return cfg;
}

double horizontal_percentage(const CsrGraph& g, RootPolicy roots) {
  std::vector<VertexId> order;
  if (roots == RootPolicy::kDegreeDescending) order = degree_order(g).second.inverse;
  const auto levels = bfs_forest(g, order);
  if (g.num_edges() == 0) return 0.0;
  return 100.0 * static_cast<double>(count_horizontal_edges(g, levels)) /
         static_cast<double>(g.num_edges());
}

std::vector<BenchRecord> run_bench(std::span<const NamedGraph> graphs,
                                   std::span<const Algorithm> algorithms, int runs,
                                   RootPolicy roots) {
  if (runs < 1) throw UsageError("runs must be >= 1");
  if (algorithms.empty()) throw UsageError("no algorithms selected");
  using Clock = std::chrono::steady_clock;

  std::vector<BenchRecord> records;
  for (const auto& [name, g] : graphs) {
    const double k = horizontal_percentage(g, roots);
    const Algorithm* reference = nullptr;
    TriangleCount expected = 0;
    for (const auto& algo : algorithms) {
      BenchRecord rec;
      rec.graph = name;
      rec.n = g.num_vertices();
      rec.m = g.num_edges();
      rec.k_pct = k;
      rec.algorithm = algo.key;
      rec.runs = runs;
      for (int r = 0; r < runs; ++r) {
        const auto start = Clock::now();
        const TriangleCount count = algo.count(g);
        const auto stop = Clock::now();
        rec.per_run_seconds.push_back(std::chrono::duration<double>(stop - start).count());
        if (reference == nullptr) {
          reference = &algo;
          expected = count;
        } else if (count != expected) {
          throw CountMismatchError("graph '" + name + "': " + reference->key + " counted " +
                                   std::to_string(expected) + " triangles but " + algo.key +
                                   " counted " + std::to_string(count) + " (run " +
                                   std::to_string(r + 1) + ")");
        }
      }
      rec.triangles = expected;
      const double sum =
          std::accumulate(rec.per_run_seconds.begin(), rec.per_run_seconds.end(), 0.0);
      rec.mean_seconds = sum / runs;
      double sq = 0.0;
      for (double t : rec.per_run_seconds) sq += (t - rec.mean_seconds) * (t - rec.mean_seconds);
      rec.variance_seconds = sq / runs;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<Algorithm> algorithms;
  for (const auto& key : cfg.algorithms) {
    const Algorithm* a = find_algorithm(key);
    if (a == nullptr) throw UsageError("unknown algorithm key '" + key + "'");
    algorithms.push_back(*a);
  }
  std::vector<NamedGraph> graphs;
  for (const auto& src : cfg.graphs)
    graphs.push_back({src.name, load_graph_source(src.source)});
  return run_bench(graphs, algorithms, cfg.runs, cfg.roots);
}

std::string emit_table(std::span<const BenchRecord> records, OutputFormat format) {
  if (records.empty()) throw UsageError("no benchmark records to emit");
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kCsv: {
      out << "graph,n,m,triangles,k_pct,algorithm,runs,mean_seconds\n";
      for (const auto& r : records) {
        out << r.graph << ',' << r.n << ',' << r.m << ',' << r.triangles << ','
            << fixed(r.k_pct, 1) << ',' << r.algorithm << ',' << r.runs << ','
            << fixed(r.mean_seconds, 6) << '\n';
      }
      break;
    }
    case OutputFormat::kMarkdown: {
      std::vector<std::string> graphs, algos;
      for (const auto& r : records) {
        if (std::find(graphs.begin(), graphs.end(), r.graph) == graphs.end())
          graphs.push_back(r.graph);
        if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end())
          algos.push_back(r.algorithm);
      }
      out << "| Graph | n | m | # triangles |";
      for (const auto& a : algos) out << ' ' << a << " |";
      out << " k (%) |\n|:--|--:|--:|--:|";
      for (std::size_t i = 0; i < algos.size(); ++i) out << "--:|";
      out << "--:|\n";
      for (const auto& gname : graphs) {
        const BenchRecord* first = nullptr;
        for (const auto& r : records) {
          if (r.graph == gname) {
            first = &r;
            break;
          }
        }
        out << "| " << gname << " | " << first->n << " | " << first->m << " | "
            << first->triangles << " |";
        for (const auto& a : algos) {
          auto it = std::find_if(records.begin(), records.end(), [&](const BenchRecord& r) {
            return r.graph == gname && r.algorithm == a;
          });
          out << ' ' << (it == records.end() ? std::string("-") : fixed(it->mean_seconds, 6))
              << " |";
        }
        out << ' ' << fixed(first->k_pct, 1) << " |\n";
      }
      break;
    }
    case OutputFormat::kJson: {
      auto arr = nlohmann::json::array();
      for (const auto& r : records) {
        arr.push_back({{"graph", r.graph},
                       {"n", r.n},
                       {"m", r.m},
                       {"triangles", r.triangles},
                       {"k_pct", std::round(r.k_pct * 10.0) / 10.0},
                       {"algorithm", r.algorithm},
                       {"runs", r.runs},
                       {"mean_seconds", r.mean_seconds},
                       {"variance_seconds", r.variance_seconds},
                       {"per_run_seconds", r.per_run_seconds}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace tc::bench
