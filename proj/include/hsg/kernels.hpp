#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; each output element is computed by exactly one thread with
// the same summation order, so both produce bitwise-identical results.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hsg::kernels {

using Complex = std::complex<double>;

/// exp(2*pi*i*numerator/denominator), with numerator reduced mod denominator
/// in integers first.
Complex unit_root(std::uint64_t numerator, std::uint64_t denominator);

/// Table of exp(2*pi*i*t/m) for t in [0, m).
std::vector<Complex> root_table(std::uint64_t m);

// out[x] = scale * sum_{t < weights.size()} weights[t] * f[(x - t*stride) mod M]
// (a character-weighted sum of cyclic shifts; the projection operator).
// Probabilities of the QFT of a uniform arithmetic progression
// {offset + t*step : t < count} in a register of size M:
//   p(v) = |sum_t exp(2 pi i v step t / M)|^2 / (count * M).
// DFT: out[v] = scale * sum_x in[x] * exp(sign * 2 pi i v x / M).
namespace serial {
std::vector<Complex> shifted_sum(std::span<const Complex> f, std::span<const Complex> weights,
                                 std::uint64_t stride, double scale);
std::vector<double> progression_distribution(std::uint64_t m, std::uint64_t step,
                                             std::uint64_t count);
std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale);
}  // namespace serial

namespace parallel {
std::vector<Complex> shifted_sum(std::span<const Complex> f, std::span<const Complex> weights,
                                 std::uint64_t stride, double scale);
std::vector<double> progression_distribution(std::uint64_t m, std::uint64_t step,
                                             std::uint64_t count);
std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale);
}  // namespace parallel

/// Whether the parallel namespace was compiled with OpenMP.
bool openmp_enabled();

}  // namespace hsg::kernels
