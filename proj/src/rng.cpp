#include "hsg/rng.hpp"

#include "hsg/errors.hpp"

namespace hsg {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs bound >= 1");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t draw = next_u64();
  while (draw > limit) draw = next_u64();
  return draw % bound;
}

}  // namespace hsg
