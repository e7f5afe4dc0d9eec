#include "tc/rmat.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tc/errors.hpp"

namespace tc {

void validate(const RmatParams& p) {
  if (p.scale < 1) throw UsageError("rmat scale must be >= 1");
  if (p.edge_factor < 1) throw UsageError("rmat edge factor must be >= 1");
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0)
    throw UsageError("rmat probabilities must be nonnegative");
  if (std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-12)
    throw UsageError("rmat probabilities must sum to 1");
}

EdgeList rmat_generate(const RmatParams& p) {
  validate(p);
  // Ids must stay below numeric_limits<VertexId>::max() so n fits too.
  if (p.scale >= std::numeric_limits<VertexId>::digits)
    throw CapacityError("rmat scale " + std::to_string(p.scale) +
                        " overflows the 32-bit vertex id type");
  const std::uint64_t n = std::uint64_t{1} << p.scale;
  const std::uint64_t pairs = n * static_cast<std::uint64_t>(p.edge_factor);

  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double ab = p.a + p.b;
  const double abc = ab + p.c;

  EdgeList el;
  el.n_hint = n;
  el.edges.reserve(pairs);
  for (std::uint64_t e = 0; e < pairs; ++e) {
    VertexId row = 0;
    VertexId col = 0;
    for (int bit = p.scale - 1; bit >= 0; --bit) {
      const double r = uniform();
      const VertexId half = VertexId{1} << bit;
      if (r < p.a) {
      } else if (r < ab) {
        col |= half;
      } else if (r < abc) {
        row |= half;
      } else {
        row |= half;
        col |= half;
      }
    }
    el.edges.emplace_back(row, col);
  }
  return el;
}

}  // namespace tc
