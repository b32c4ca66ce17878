#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "hsg/exact_int.hpp"
#include "hsg/group.hpp"

namespace hsg {

/// The oracle f(x) = a^x mod N on the extended group G^{N,a}.
/// a < N is not required; a only has to be >= 2 and coprime to N.
class OracleSpec {
public:
  OracleSpec(ExactInt n, ExactInt a) : extended_(n, a) {}

  ExactInt n() const { return extended_.n(); }
  ExactInt a() const { return extended_.a(); }
  const ExtendedGroupSpec& extended() const { return extended_; }

private:
  ExtendedGroupSpec extended_;
};

/// a^x = alpha * N + beta with 0 <= beta < N. beta selects the coset
/// C_{aN}^beta G^a that x is mapped to.
struct CosetLabel {
  ExactInt alpha;
  ExactInt beta;
  bool operator==(const CosetLabel&) const = default;
};

/// Exact (alpha, beta). Throws OverflowError when a^x > 2^127 - 1.
CosetLabel oracle_eval(const OracleSpec& spec, std::uint64_t x);

/// a^x mod N for x = 0 .. length-1 (never overflows).
std::vector<ExactInt> residue_sequence(const OracleSpec& spec, std::uint64_t length);

/// f(x1) = f(x2) <=> x1 = x2 (mod r) checked over all pairs in [0, window).
struct PeriodReport {
  std::uint64_t order = 0;
  std::uint64_t window = 0;
  std::uint64_t violations = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_violation;
  bool holds() const { return violations == 0; }
};

/// Default window: 4aN.
std::uint64_t default_window(const OracleSpec& spec);
PeriodReport verify_period_subgroup(const OracleSpec& spec, std::uint64_t window);

/// Unitary DFT of the indicator 1[a^x mod N = w] over x in [0, length).
std::vector<std::complex<double>> residue_spectrum(const OracleSpec& spec, std::uint64_t length,
                                                   ExactInt residue);

/// CSV: index,magnitude_squared
void write_spectrum_csv(std::ostream& os, const std::vector<std::complex<double>>& spectrum);

}  // namespace hsg
