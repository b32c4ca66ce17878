#include "hsg/representations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsg/errors.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

namespace {

void require_order(const GroupFunction& f, std::uint64_t order) {
  if (f.order() != order) {
    throw DomainError("function length " + std::to_string(f.order()) +
                      " does not match group order " + std::to_string(order));
  }
}

std::vector<Complex> character_row(std::uint64_t label, std::uint64_t order) {
  std::vector<Complex> row(order);
  for (std::uint64_t k = 0; k < order; ++k) row[k] = irrep_value(IrrepLabel(label % order, order), k);
  return row;
}

}  // namespace

IrrepLabel::IrrepLabel(std::uint64_t j_, std::uint64_t order_) : j(j_), order(order_) {
  if (order == 0) throw DomainError("irrep label needs group order >= 1");
  if (j >= order) {
    throw DomainError("irrep label j=" + std::to_string(j) + " out of range for order " +
                      std::to_string(order));
  }
}

GroupFunction GroupFunction::zeros(std::uint64_t order) {
  return GroupFunction(std::vector<Complex>(order, Complex{0.0, 0.0}));
}

GroupFunction GroupFunction::delta(std::uint64_t order, std::uint64_t k) {
  auto f = zeros(order);
  f[k % order] = 1.0;
  return f;
}

double max_abs_difference(const GroupFunction& f, const GroupFunction& g) {
  require_order(g, f.order());
  double worst = 0.0;
  for (std::uint64_t k = 0; k < f.order(); ++k) worst = std::max(worst, std::abs(f[k] - g[k]));
  return worst;
}

double max_abs(const GroupFunction& f) {
  double worst = 0.0;
  for (const auto& v : f.values) worst = std::max(worst, std::abs(v));
  return worst;
}

Complex irrep_value(IrrepLabel label, std::uint64_t k) {
  if (k >= label.order) throw DomainError("group element index out of range");
  const auto jk = static_cast<unsigned __int128>(label.j) * k % label.order;
  return kernels::unit_root(static_cast<std::uint64_t>(jk), label.order);
}

OrthogonalityReport verify_great_orthogonality(std::uint64_t order, double tolerance) {
  if (order == 0) throw DomainError("group order must be >= 1");
  std::vector<std::vector<Complex>> table(order);
  for (std::uint64_t j = 0; j < order; ++j) table[j] = character_row(j, order);
  OrthogonalityReport report{order, 0.0, tolerance, false};
  const double inv_h = 1.0 / static_cast<double>(order);
  for (std::uint64_t j = 0; j < order; ++j) {
    for (std::uint64_t jp = 0; jp < order; ++jp) {
      Complex acc{0.0, 0.0};
      for (std::uint64_t k = 0; k < order; ++k) acc += std::conj(table[j][k]) * table[jp][k];
      const Complex expected = j == jp ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      report.max_deviation = std::max(report.max_deviation, std::abs(acc * inv_h - expected));
    }
  }
  report.passed = report.max_deviation < tolerance;
  return report;
}

GroupFunction shift(const GroupFunction& f, GroupElement g) {
  require_order(f, g.order);
  const std::uint64_t m = f.order();
  GroupFunction out = GroupFunction::zeros(m);
  for (std::uint64_t x = 0; x < m; ++x) out[x] = f[(x + m - g.index) % m];
  return out;
}

GroupFunction project(IrrepLabel label, const GroupFunction& f) {
  require_order(f, label.order);
  const auto weights = character_row(label.j, label.order);
  return GroupFunction(
      kernels::parallel::shifted_sum(f.values, weights, 1, 1.0 / static_cast<double>(label.order)));
}

GroupFunction project_via_primes(IrrepLabel label, const GroupFunction& f,
                                 const PrimeFactorization& factorization) {
  require_order(f, label.order);
  if (factorization.n() != ExactInt{label.order}) {
    throw DomainError("factorization does not match group order");
  }
  if (!factorization.square_free()) {
    throw DomainError("prime-factor projection requires square-free order, got " +
                      factorization.n().to_string());
  }
  GroupFunction out = f;
  for (const auto& pp : factorization.factors()) {
    const std::uint64_t b = pp.prime.to_u64();
    const std::uint64_t generator = label.order / b;  // C_b = C_N^{N/b}
    const auto weights = character_row(label.j % b, b);
    out.values = kernels::parallel::shifted_sum(out.values, weights, generator,
                                                1.0 / static_cast<double>(b));
  }
  return out;
}

TranslationReport translation_phase_check(IrrepLabel label, const GroupFunction& f,
                                          double tolerance) {
  const GroupFunction projected = project(label, f);
  const CyclicGroup group(label.order);
  const GroupFunction advanced = shift(projected, inverse(group.generator()));
  TranslationReport report;
  report.expected_phase = irrep_value(label, label.order == 1 ? 0 : 1);
  report.tolerance = tolerance;
  for (std::uint64_t x = 0; x < label.order; ++x) {
    report.max_deviation =
        std::max(report.max_deviation, std::abs(advanced[x] - report.expected_phase * projected[x]));
  }
  report.passed = report.max_deviation < tolerance;
  return report;
}

}  // namespace hsg
