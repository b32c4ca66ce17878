#include "hsg/kernels.hpp"

#include <cmath>
#include <numbers>

#include "hsg/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsg::kernels {

namespace {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

// Per-element bodies shared by the serial and parallel loops.

Complex shifted_sum_at(std::span<const Complex> f, std::span<const Complex> weights,
                       std::uint64_t stride, double scale, std::uint64_t x) {
  const std::uint64_t m = f.size();
  const std::uint64_t step = stride % m;
  std::uint64_t src = x;
  Complex acc{0.0, 0.0};
  for (std::size_t t = 0; t < weights.size(); ++t) {
    acc += weights[t] * f[src];
    src = src >= step ? src - step : src + m - step;
  }
  return acc * scale;
}

double progression_at(std::uint64_t m, std::uint64_t step, std::uint64_t count, std::uint64_t v) {
  // |sum_{t<c} w^t|^2 with w = exp(2 pi i theta / M), theta = v*step mod M,
  // equals sin^2(pi theta c / M) / sin^2(pi theta / M), or c^2 when theta = 0.
  const std::uint64_t theta = mul_mod(v, step, m);
  const double c = static_cast<double>(count);
  const double norm = c * static_cast<double>(m);
  if (theta == 0) return c * c / norm;
  const std::uint64_t wrapped = mul_mod(theta, count, m);
  const double md = static_cast<double>(m);
  const double num = std::sin(std::numbers::pi * static_cast<double>(wrapped) / md);
  const double den = std::sin(std::numbers::pi * static_cast<double>(theta) / md);
  return (num * num) / (den * den) / norm;
}

Complex dft_at(std::span<const Complex> in, std::span<const Complex> roots, int sign, double scale,
               std::uint64_t v) {
  const std::uint64_t m = in.size();
  Complex acc{0.0, 0.0};
  std::uint64_t phase = 0;  // v*x mod M
  const std::uint64_t inc = sign >= 0 ? v % m : (m - v % m) % m;
  for (std::uint64_t x = 0; x < m; ++x) {
    acc += in[x] * roots[phase];
    phase += inc;
    if (phase >= m) phase -= m;
  }
  return acc * scale;
}

void check_progression(std::uint64_t m, std::uint64_t count) {
  if (m == 0 || count == 0) throw DomainError("progression distribution needs M, count >= 1");
}

}  // namespace

Complex unit_root(std::uint64_t numerator, std::uint64_t denominator) {
  const std::uint64_t r = numerator % denominator;
  if (r == 0) return {1.0, 0.0};
  // Exact values at half and quarter turns avoid sin(pi) != 0 round-off.
  if (2 * r == denominator) return {-1.0, 0.0};
  if (4 * r == denominator) return {0.0, 1.0};
  if (4 * r == 3 * denominator) return {0.0, -1.0};
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> root_table(std::uint64_t m) {
  std::vector<Complex> out(m);
  for (std::uint64_t t = 0; t < m; ++t) out[t] = unit_root(t, m);
  return out;
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace serial {

std::vector<Complex> shifted_sum(std::span<const Complex> f, std::span<const Complex> weights,
                                 std::uint64_t stride, double scale) {
  std::vector<Complex> out(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) out[x] = shifted_sum_at(f, weights, stride, scale, x);
  return out;
}

std::vector<double> progression_distribution(std::uint64_t m, std::uint64_t step,
                                             std::uint64_t count) {
  check_progression(m, count);
  std::vector<double> out(m);
  for (std::uint64_t v = 0; v < m; ++v) out[v] = progression_at(m, step, count, v);
  return out;
}

std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale) {
  const auto roots = root_table(in.size());
  std::vector<Complex> out(in.size());
  for (std::uint64_t v = 0; v < in.size(); ++v) out[v] = dft_at(in, roots, sign, scale, v);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Complex> shifted_sum(std::span<const Complex> f, std::span<const Complex> weights,
                                 std::uint64_t stride, double scale) {
  const auto m = static_cast<std::int64_t>(f.size());
  std::vector<Complex> out(f.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < m; ++x) {
    out[x] = shifted_sum_at(f, weights, stride, scale, static_cast<std::uint64_t>(x));
  }
  return out;
}

std::vector<double> progression_distribution(std::uint64_t m, std::uint64_t step,
                                             std::uint64_t count) {
  check_progression(m, count);
  const auto size = static_cast<std::int64_t>(m);
  std::vector<double> out(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < size; ++v) {
    out[v] = progression_at(m, step, count, static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale) {
  const auto roots = root_table(in.size());
  const auto m = static_cast<std::int64_t>(in.size());
  std::vector<Complex> out(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < m; ++v) {
    out[v] = dft_at(in, roots, sign, scale, static_cast<std::uint64_t>(v));
  }
  return out;
}

}  // namespace parallel

}  // namespace hsg::kernels
