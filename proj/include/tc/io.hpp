#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "tc/graph.hpp"

namespace tc {

// SNAP plain-text edge list: '#' starts a comment line, every other non-blank
// line is "u v" with nonnegative integer ids. Throws ParseError with the
// 1-based line number on a malformed line.
EdgeList load_snap_edge_list(std::istream& in);

// Writes one "u\tv" line per pair, preceded by an optional '#' comment.
void write_snap_edge_list(std::ostream& out, const EdgeList& el,
                          std::string_view comment = {});

// Binary CSR cache, all fields little-endian:
//   magic "TCSR" | version u32 | n u64 | m u64 | offsets (n+1) x u64 |
//   neighbors (2m) x u64
inline constexpr std::uint32_t kCsrCacheVersion = 1;

void write_csr_binary(std::ostream& out, const CsrGraph& g);
// Throws FormatError on a bad header, truncated body or invalid CSR.
CsrGraph read_csr_binary(std::istream& in);

enum class GraphFormat { kAuto, kSnapText, kBinaryCsr };

// .txt / .el -> SNAP text, .bin -> binary CSR. Throws UsageError otherwise.
GraphFormat sniff_format(const std::filesystem::path& path);

// Loads and canonicalizes a graph file. Throws IoError if it cannot be opened.
CsrGraph load_graph(const std::filesystem::path& path,
                    GraphFormat format = GraphFormat::kAuto);

void save_graph(const std::filesystem::path& path, const CsrGraph& g,
                GraphFormat format = GraphFormat::kAuto);

}  // namespace tc
