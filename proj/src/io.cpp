#include "tc/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <type_traits>

#include "tc/errors.hpp"

namespace tc {
namespace {

constexpr std::array<char, 4> kMagic = {'T', 'C', 'S', 'R'};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

VertexId parse_id(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-')
    throw ParseError(line_no, "negative vertex id '" + std::string(token) + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && value >= std::numeric_limits<VertexId>::max()))
    throw ParseError(line_no, "vertex id '" + std::string(token) + "' out of range");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, "expected integer vertex id, got '" + std::string(token) + "'");
  return static_cast<VertexId>(value);
}

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::is_unsigned_v<T>);
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i)
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in, const char* field) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
    throw FormatError(std::string("truncated CSR cache while reading ") + field);
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

EdgeList load_snap_edge_list(std::istream& in) {
  EdgeList el;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::array<std::string_view, 2> tokens;
    std::size_t count = 0;
    while (true) {
      while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
      if (rest.empty()) break;
      if (count == 0 && rest.front() == '#') break;
      std::size_t len = 0;
      while (len < rest.size() && !is_space(rest[len])) ++len;
      if (count == tokens.size())
        throw ParseError(line_no, "expected 2 fields, got more");
      tokens[count++] = rest.substr(0, len);
      rest.remove_prefix(len);
    }
    if (count == 0) continue;
    if (count != 2) throw ParseError(line_no, "expected 2 fields, got 1");
    el.edges.emplace_back(parse_id(tokens[0], line_no), parse_id(tokens[1], line_no));
  }
  return el;
}

void write_snap_edge_list(std::ostream& out, const EdgeList& el,
                          std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (auto [u, v] : el.edges) out << u << '\t' << v << '\n';
}

void write_csr_binary(std::ostream& out, const CsrGraph& g) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kCsrCacheVersion);
  put_le<std::uint64_t>(out, g.num_vertices());
  put_le<std::uint64_t>(out, g.num_edges());
  for (EdgeIndex o : g.offsets()) put_le<std::uint64_t>(out, o);
  for (VertexId v : g.adjacency()) put_le<std::uint64_t>(out, v);
  if (!out) throw IoError("failed writing CSR cache");
}

CsrGraph read_csr_binary(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic) throw FormatError("bad CSR cache magic");
  auto version = get_le<std::uint32_t>(in, "version");
  if (version != kCsrCacheVersion)
    throw FormatError("unsupported CSR cache version " + std::to_string(version));
  auto n = get_le<std::uint64_t>(in, "n");
  auto m = get_le<std::uint64_t>(in, "m");
  if (n >= std::numeric_limits<VertexId>::max())
    throw FormatError("vertex count exceeds the 32-bit id space");
  if (m > std::numeric_limits<std::uint64_t>::max() / 4)
    throw FormatError("edge count too large");

  std::vector<EdgeIndex> offsets(n + 1);
  for (auto& o : offsets) o = get_le<std::uint64_t>(in, "offsets");
  if (offsets.back() != 2 * m) throw FormatError("offsets[n] != 2m");
  std::vector<VertexId> neighbors;
  neighbors.reserve(2 * m);
  for (std::uint64_t i = 0; i < 2 * m; ++i) {
    auto v = get_le<std::uint64_t>(in, "neighbors");
    if (v >= n) throw FormatError("neighbor id out of range");
    neighbors.push_back(static_cast<VertexId>(v));
  }
  try {
    return CsrGraph::from_arrays(std::move(offsets), std::move(neighbors));
  } catch (const ContractError& e) {
    throw FormatError(std::string("invalid CSR cache: ") + e.what());
  }
}

GraphFormat sniff_format(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".txt" || ext == ".el") return GraphFormat::kSnapText;
  if (ext == ".bin") return GraphFormat::kBinaryCsr;
  throw UsageError("cannot infer graph format from '" + path.string() +
                   "'; use .txt/.el/.bin or pass a format explicitly");
}

CsrGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = sniff_format(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  if (format == GraphFormat::kBinaryCsr) return read_csr_binary(in);
  return build_csr(load_snap_edge_list(in));
}

void save_graph(const std::filesystem::path& path, const CsrGraph& g,
                GraphFormat format) {
  if (format == GraphFormat::kAuto) format = sniff_format(path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  if (format == GraphFormat::kBinaryCsr) {
    write_csr_binary(out, g);
  } else {
    write_snap_edge_list(out, to_edge_list(g));
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace tc
