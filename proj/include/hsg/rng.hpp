#pragma once

#include <cstdint>
#include <random>

namespace hsg {

/// Deterministic stream used for every random choice in the simulator.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The std distributions are implementation-defined, so bounded
/// integers and unit doubles are derived here by hand: identical
/// (seed -> outcome) on every conforming platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound) by rejection; bound must be >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double unit_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

}  // namespace hsg
