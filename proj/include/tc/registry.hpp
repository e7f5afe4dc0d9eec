#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tc/graph.hpp"

namespace tc {

using CountFn = std::function<TriangleCount(const CsrGraph&)>;

struct Algorithm {
  std::string key;  // table key, e.g. "FH", "BaderD"
  std::string description;
  CountFn count;
};

// All 20 benchmarked variants in table order:
// IR V VD EM EMD EB EBD EP EPD EH EHD F FH FHD TS LA CE CED Bader BaderD
std::span<const Algorithm> registry();

// nullptr when the key is unknown. Keys are case-sensitive.
const Algorithm* find_algorithm(std::string_view key);

// Comma-separated keys, or "all". Throws UsageError on an unknown key.
std::vector<Algorithm> parse_algorithm_list(std::string_view keys);

}  // namespace tc
