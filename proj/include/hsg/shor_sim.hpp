#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsg/arithmetic.hpp"
#include "hsg/errors.hpp"
#include "hsg/exact_int.hpp"
#include "hsg/rng.hpp"

namespace hsg {

enum class RegisterMode {
  kPowerOfTwo,  // M = smallest 2^q >= N^2
  kPaperOrder,  // M = aN, the order of G^{N,a}
};

std::string_view to_string(RegisterMode mode);

/// Dense distributions are held in memory; larger registers are rejected.
inline constexpr std::uint64_t kMaxRegisterSize = std::uint64_t{1} << 26;

struct RegisterConfig {
  std::uint64_t size = 0;  // top register dimension M
  ExactInt n;
  ExactInt a;
  RegisterMode mode = RegisterMode::kPowerOfTwo;

  /// Validates (gcd(a, N) = 1, a >= 2, M within kMaxRegisterSize) and derives
  /// M from the mode unless size_override is given.
  static RegisterConfig make(ExactInt n, ExactInt a, RegisterMode mode,
                             std::optional<std::uint64_t> size_override = std::nullopt);
};

/// {offset + t*step : t < count}. step is 0 when count == 1.
struct ResidueProgression {
  std::uint64_t offset = 0;
  std::uint64_t step = 0;
  std::uint64_t count = 0;

  bool contains(std::uint64_t x) const;
  bool operator==(const ResidueProgression&) const = default;
};

/// sum_x |x>|a^x mod N> / sqrt(M). Each bottom-register residue w carries the
/// top-register values x with a^x = w (mod N), stored as a progression.
struct EntangledState {
  RegisterConfig config;
  std::map<std::uint64_t, ResidueProgression> branches;

  double amplitude() const;   // 1/sqrt(M) on every x
  double total_norm() const;  // sum over branches of count/M
};

/// Top register left after the bottom register reads w: uniform over the
/// progression, renormalized.
struct CollapsedRegister {
  std::uint64_t register_size = 0;
  std::uint64_t residue = 0;
  ResidueProgression support;

  double amplitude() const;
  std::vector<std::complex<double>> dense() const;
  double total_norm() const;
};

struct MeasurementDistribution {
  std::vector<double> probabilities;
  std::uint64_t residue = 0;
  std::uint64_t register_size = 0;
  ExactInt n;
  ExactInt a;

  double total() const;
};

EntangledState prepare_uniform(const RegisterConfig& config);

/// Draws w with probability count(w)/M, or uses forced_w (DomainError if it
/// is not an attained residue).
CollapsedRegister measure_bottom(const EntangledState& state, std::optional<std::uint64_t> forced_w,
                                 Rng& rng);
CollapsedRegister measure_bottom(const EntangledState& state, std::optional<std::uint64_t> forced_w,
                                 std::uint64_t seed);

/// Exact |QFT|^2 of the collapsed register, from the closed-form geometric sum.
MeasurementDistribution qft_distribution(const CollapsedRegister& collapsed, ExactInt n = {},
                                         ExactInt a = {});

/// |QFT|^2 of arbitrary (normalized) amplitudes by direct summation; O(M^2).
std::vector<double> qft_distribution_dense(std::span<const std::complex<double>> amplitudes);

/// Inverse-CDF draw using one Rng::unit_double().
std::uint64_t sample_outcome(const MeasurementDistribution& dist, Rng& rng);
std::uint64_t sample_outcome(const MeasurementDistribution& dist, std::uint64_t seed);

/// Smallest convergent denominator q <= N of v/M with a^q = 1 (mod N),
/// reduced to the multiplicative order of a.
std::optional<std::uint64_t> extract_period(std::uint64_t v, std::uint64_t register_size,
                                            ExactInt n, ExactInt a);

enum class SampleStatus { kSuccess, kTrivial, kOddOrder, kMinusOne };
std::string_view to_string(SampleStatus status);

struct FactorSample {
  ExactInt a;
  std::uint64_t residue = 0;
  std::uint64_t outcome = 0;
  std::vector<Convergent> convergents;
  std::optional<std::uint64_t> candidate_r;
  SampleStatus status = SampleStatus::kTrivial;
};

struct FactorReport {
  ExactInt n;
  std::optional<ExactInt> a;  // base of the last circuit run (or the given base)
  RegisterMode mode = RegisterMode::kPowerOfTwo;
  std::uint64_t register_size = 0;  // 0 when no circuit was run
  std::optional<std::uint64_t> order;
  std::vector<FactorSample> samples;
  std::optional<std::pair<ExactInt, ExactInt>> factors;  // ascending
  std::uint64_t attempts = 0;
  std::uint64_t seed = 0;
};

struct FactorOptions {
  std::optional<ExactInt> a;
  RegisterMode mode = RegisterMode::kPowerOfTwo;
  std::optional<std::uint64_t> register_size;
  std::uint64_t max_attempts = 16;
  std::uint64_t seed = 0;
};

/// Raised when max_attempts circuit runs produce no factor; carries the report.
class AttemptsExhaustedError : public Error {
public:
  AttemptsExhaustedError(const std::string& what, FactorReport report)
      : Error(what), report_(std::move(report)) {}
  const FactorReport& report() const { return report_; }

private:
  FactorReport report_;
};

/// Full pipeline: pre-checks, circuit simulation, period extraction, gcd step.
FactorReport factor(ExactInt n, const FactorOptions& options = {});

/// FactorReport as JSON with the documented key order.
std::string factor_report_json(const FactorReport& report);

/// CSV: v,probability
void write_distribution_csv(std::ostream& os, const MeasurementDistribution& dist);

}  // namespace hsg
