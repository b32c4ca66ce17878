#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hsg/arithmetic.hpp"
#include "hsg/group.hpp"

namespace hsg {

using Complex = std::complex<double>;

/// Label j of the scalar irrep Gamma^(j)(C_M^k) = exp(2*pi*i*j*k/M).
/// Every irrep of a cyclic group is one-dimensional, so there are M labels.
struct IrrepLabel {
  std::uint64_t j = 0;
  std::uint64_t order = 1;

  IrrepLabel() = default;
  IrrepLabel(std::uint64_t j, std::uint64_t order);
};

/// One complex sample per slice of the circle, indexed by group element.
struct GroupFunction {
  std::vector<Complex> values;

  GroupFunction() = default;
  explicit GroupFunction(std::vector<Complex> v) : values(std::move(v)) {}
  static GroupFunction zeros(std::uint64_t order);
  static GroupFunction delta(std::uint64_t order, std::uint64_t k);

  std::uint64_t order() const { return values.size(); }
  const Complex& operator[](std::uint64_t k) const { return values[k]; }
  Complex& operator[](std::uint64_t k) { return values[k]; }
};

/// max_k |f[k] - g[k]|. Throws DomainError on length mismatch.
double max_abs_difference(const GroupFunction& f, const GroupFunction& g);
double max_abs(const GroupFunction& f);

Complex irrep_value(IrrepLabel label, std::uint64_t k);

struct OrthogonalityReport {
  std::uint64_t order = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Checks (1/M) sum_k conj(Gamma^(j)(k)) Gamma^(j')(k) = delta_{jj'} for all
/// label pairs.
OrthogonalityReport verify_great_orthogonality(std::uint64_t order, double tolerance);

/// Wigner convention (P_g f)(x) = f(g^{-1} x): output[x] = f[(x - k_g) mod M].
GroupFunction shift(const GroupFunction& f, GroupElement g);

/// P^(j) f = (1/M) sum_k Gamma^(j)(C^k) P_{C^k} f.
/// Normalized with the group-order prefactor 1/h, not the unitary 1/sqrt(M).
GroupFunction project(IrrepLabel label, const GroupFunction& f);

/// Same projector built as a product of prime-order subgroup projectors:
/// for each prime b (ascending), label j mod b acting through shifts by
/// multiples of N/b. Requires square-free order.
GroupFunction project_via_primes(IrrepLabel label, const GroupFunction& f,
                                 const PrimeFactorization& factorization);

struct TranslationReport {
  Complex expected_phase;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Bloch-phase check: advancing the argument of P^(j) f by one slice,
/// x -> x + 1 (the shift by C^{-1}), multiplies it by exp(2*pi*i*j/M).
TranslationReport translation_phase_check(IrrepLabel label, const GroupFunction& f,
                                          double tolerance);

}  // namespace hsg
