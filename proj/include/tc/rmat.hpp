#pragma once

#include <cstdint>

#include "tc/graph.hpp"

namespace tc {

// Recursive-matrix generator configuration. Defaults are the Graph500
// initiator probabilities.
struct RmatParams {
  int scale = 6;
  int edge_factor = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 1;
};

// Throws UsageError if a probability is negative or they do not sum to 1
// within 1e-12, or if scale / edge_factor is below 1.
void validate(const RmatParams& p);

// Emits edge_factor * 2^scale directed pairs over 2^scale vertices by
// descending `scale` quadrant choices per pair. Pairs are raw: duplicates and
// self-loops are kept. The stream is std::mt19937_64 seeded with p.seed; each
// quadrant choice consumes one 64-bit draw mapped to [0,1) by its top 53 bits,
// so output is identical on every platform.
//
// Throws CapacityError when 2^scale vertices do not fit the id type.
EdgeList rmat_generate(const RmatParams& p);

}  // namespace tc
