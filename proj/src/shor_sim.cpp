#include "hsg/shor_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include "hsg/format.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

std::string_view to_string(RegisterMode mode) {
  return mode == RegisterMode::kPowerOfTwo ? "powerOfTwo" : "paperOrder";
}

std::string_view to_string(SampleStatus status) {
  switch (status) {
    case SampleStatus::kSuccess: return "success";
    case SampleStatus::kTrivial: return "trivial";
    case SampleStatus::kOddOrder: return "odd_order";
    case SampleStatus::kMinusOne: return "minus_one";
  }
  return "trivial";
}

RegisterConfig RegisterConfig::make(ExactInt n, ExactInt a, RegisterMode mode,
                                    std::optional<std::uint64_t> size_override) {
  if (n < ExactInt{2}) throw DomainError("register config needs N >= 2");
  if (a < ExactInt{2}) throw DomainError("register config needs a >= 2");
  if (gcd(a, n) != ExactInt{1}) {
    throw DomainError("a=" + a.to_string() + " is not coprime to N=" + n.to_string());
  }
  RegisterConfig config{0, n, a, mode};
  if (size_override) {
    config.size = *size_override;
  } else if (mode == RegisterMode::kPaperOrder) {
    const ExactInt order = n * a;
    if (order > ExactInt{kMaxRegisterSize}) throw DomainError("register size aN too large");
    config.size = order.to_u64();
  } else {
    const ExactInt squared = n * n;
    if (squared > ExactInt{kMaxRegisterSize}) {
      throw DomainError("N^2 exceeds the maximum register size " + std::to_string(kMaxRegisterSize));
    }
    std::uint64_t size = 1;
    while (ExactInt{size} < squared) size <<= 1;
    config.size = size;
  }
  if (config.size > kMaxRegisterSize) {
    throw DomainError("register size " + std::to_string(config.size) + " exceeds " +
                      std::to_string(kMaxRegisterSize));
  }
  return config;
}

bool ResidueProgression::contains(std::uint64_t x) const {
  if (count == 0 || x < offset) return false;
  if (count == 1) return x == offset;
  const std::uint64_t d = x - offset;
  return d % step == 0 && d / step < count;
}

double EntangledState::amplitude() const {
  return 1.0 / std::sqrt(static_cast<double>(config.size));
}

double EntangledState::total_norm() const {
  double total = 0.0;
  for (const auto& [w, prog] : branches) {
    total += static_cast<double>(prog.count) / static_cast<double>(config.size);
  }
  return total;
}

double CollapsedRegister::amplitude() const {
  return 1.0 / std::sqrt(static_cast<double>(support.count));
}

std::vector<std::complex<double>> CollapsedRegister::dense() const {
  std::vector<std::complex<double>> out(register_size);
  for (std::uint64_t t = 0; t < support.count; ++t) out[support.offset + t * support.step] = amplitude();
  return out;
}

double CollapsedRegister::total_norm() const {
  const double amp = amplitude();
  return static_cast<double>(support.count) * amp * amp;
}

double MeasurementDistribution::total() const {
  double total = 0.0;
  for (double p : probabilities) total += p;
  return total;
}

EntangledState prepare_uniform(const RegisterConfig& config) {
  if (config.size < 2) throw DomainError("top register needs M >= 2");
  if (config.size > kMaxRegisterSize) throw DomainError("register size too large");
  EntangledState state{config, {}};
  const std::uint64_t n = config.n.to_u64();
  const std::uint64_t base = (config.a % config.n).to_u64();
  std::uint64_t value = 1 % n;
  for (std::uint64_t x = 0; x < config.size; ++x) {
    auto [it, inserted] = state.branches.try_emplace(value, ResidueProgression{x, 0, 1});
    if (!inserted) {
      ResidueProgression& prog = it->second;
      if (prog.count == 1) {
        prog.step = x - prog.offset;
      } else if (x != prog.offset + prog.count * prog.step) {
        throw Error("oracle output is not periodic at x=" + std::to_string(x));
      }
      ++prog.count;
    }
    value = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value) * base % n);
  }
  return state;
}

CollapsedRegister measure_bottom(const EntangledState& state, std::optional<std::uint64_t> forced_w,
                                 Rng& rng) {
  const std::uint64_t m = state.config.size;
  if (forced_w) {
    const auto it = state.branches.find(*forced_w);
    if (it == state.branches.end()) {
      throw DomainError("residue " + std::to_string(*forced_w) + " is not attained by a^x mod " +
                        state.config.n.to_string());
    }
    return {m, it->first, it->second};
  }
  // P(w) = count(w)/M: pick a uniformly random top value and read its residue.
  const std::uint64_t x = rng.uniform_below(m);
  for (const auto& [w, prog] : state.branches) {
    if (prog.contains(x)) return {m, w, prog};
  }
  throw Error("state does not cover top-register value " + std::to_string(x));
}

CollapsedRegister measure_bottom(const EntangledState& state, std::optional<std::uint64_t> forced_w,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return measure_bottom(state, forced_w, rng);
}

MeasurementDistribution qft_distribution(const CollapsedRegister& collapsed, ExactInt n, ExactInt a) {
  MeasurementDistribution dist;
  // The offset only contributes a global phase per outcome, so |amplitude|^2
  // depends on (M, step, count) alone.
  dist.probabilities = kernels::parallel::progression_distribution(
      collapsed.register_size, collapsed.support.step, collapsed.support.count);
  dist.residue = collapsed.residue;
  dist.register_size = collapsed.register_size;
  dist.n = n;
  dist.a = a;
  return dist;
}

std::vector<double> qft_distribution_dense(std::span<const std::complex<double>> amplitudes) {
  const auto transformed = kernels::parallel::dft(
      amplitudes, +1, 1.0 / std::sqrt(static_cast<double>(amplitudes.size())));
  std::vector<double> out(transformed.size());
  std::transform(transformed.begin(), transformed.end(), out.begin(),
                 [](const std::complex<double>& c) { return std::norm(c); });
  return out;
}

std::uint64_t sample_outcome(const MeasurementDistribution& dist, Rng& rng) {
  if (dist.probabilities.empty()) throw DomainError("empty distribution");
  const double u = rng.unit_double();
  double cumulative = 0.0;
  std::uint64_t last_positive = 0;
  for (std::uint64_t v = 0; v < dist.probabilities.size(); ++v) {
    const double p = dist.probabilities[v];
    if (p <= 0.0) continue;
    last_positive = v;
    cumulative += p;
    if (u < cumulative) return v;
  }
  return last_positive;  // u landed in the rounding gap at the top
}

std::uint64_t sample_outcome(const MeasurementDistribution& dist, std::uint64_t seed) {
  Rng rng(seed);
  return sample_outcome(dist, rng);
}

namespace {

// q is a multiple of the order; strip prime factors that keep a^q = 1.
std::uint64_t reduce_to_order(std::uint64_t q, ExactInt n, ExactInt a) {
  if (q == 1) return q;
  const PrimeFactorization primes = factorize(q);
  for (const auto& pp : primes.factors()) {
    const std::uint64_t p = pp.prime.to_u64();
    while (q % p == 0 && mod_pow(a, q / p, n) == ExactInt{1}) q /= p;
  }
  return q;
}

// Largest convergent denominator that could still be a divisor of the order.
std::uint64_t best_denominator(const std::vector<Convergent>& cs, ExactInt n) {
  std::uint64_t best = 1;
  for (const auto& c : cs) {
    if (c.denominator >= n) break;
    best = c.denominator.to_u64();
  }
  return best;
}

}  // namespace

std::optional<std::uint64_t> extract_period(std::uint64_t v, std::uint64_t register_size,
                                            ExactInt n, ExactInt a) {
  if (v >= register_size) throw DomainError("outcome must be < M");
  if (v == 0) return std::nullopt;
  for (const auto& c : convergents(v, register_size)) {
    if (c.denominator > n) break;  // denominators increase
    if (mod_pow(a, c.denominator.to_u64(), n) != ExactInt{1}) continue;
    return reduce_to_order(c.denominator.to_u64(), n, a);
  }
  return std::nullopt;
}

namespace {

std::pair<ExactInt, ExactInt> ordered_pair(ExactInt p, ExactInt n) {
  const ExactInt q = n / p;
  return p < q ? std::pair{p, q} : std::pair{q, p};
}

std::optional<ExactInt> pick_base(ExactInt n, const std::set<ExactInt>& tried, Rng& rng) {
  std::vector<ExactInt> candidates;
  for (std::uint64_t c = 2; ExactInt{c} < n; ++c) {
    if (gcd(ExactInt{c}, n) == ExactInt{1} && !tried.contains(ExactInt{c})) candidates.push_back(c);
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[rng.uniform_below(candidates.size())];
}

}  // namespace

FactorReport factor(ExactInt n, const FactorOptions& options) {
  if (n < ExactInt{4}) throw DomainError("factor requires N >= 4, got " + n.to_string());
  if (is_prime(n)) throw DomainError("N=" + n.to_string() + " is prime");

  FactorReport report;
  report.n = n;
  report.mode = options.mode;
  report.seed = options.seed;
  report.a = options.a;

  if (n.rep() % 2 == 0) {
    report.factors = ordered_pair(ExactInt{2}, n);
    return report;
  }
  if (const auto power = perfect_power(n)) {
    report.factors = ordered_pair(power->root, n);
    return report;
  }

  Rng rng(options.seed);
  std::set<ExactInt> tried;
  ExactInt a;
  if (options.a) {
    a = *options.a;
    if (a < ExactInt{2}) throw DomainError("base a must be >= 2");
    const ExactInt g = gcd(a, n);
    if (g == n) throw DomainError("base a is a multiple of N");
    if (g != ExactInt{1}) {
      report.factors = ordered_pair(g, n);
      return report;
    }
  } else {
    const auto picked = pick_base(n, tried, rng);
    if (!picked) throw DomainError("no coprime base available");
    a = *picked;
  }
  tried.insert(a % n);

  std::uint64_t combined = 1;
  while (report.attempts < options.max_attempts) {
    const auto config = RegisterConfig::make(n, a, options.mode, options.register_size);
    report.a = a;
    report.register_size = config.size;
    const auto state = prepare_uniform(config);
    const auto collapsed = measure_bottom(state, std::nullopt, rng);
    const auto dist = qft_distribution(collapsed, n, a);
    FactorSample sample;
    sample.a = a;
    sample.residue = collapsed.residue;
    sample.outcome = sample_outcome(dist, rng);
    sample.convergents = convergents(sample.outcome, config.size);
    sample.candidate_r = extract_period(sample.outcome, config.size, n, a);
    ++report.attempts;
    // Outcomes s*M/r with gcd(s, r) > 1 only reveal a divisor of r; runs
    // with the same base are combined through the lcm of their denominators.
    if (sample.outcome != 0) {
      const std::uint64_t q = best_denominator(sample.convergents, n);
      combined = std::lcm(combined, q);
      if (ExactInt{combined} >= n) combined = q;  // a stray outcome; start over
      if (!sample.candidate_r && ExactInt{combined} < n && mod_pow(a, combined, n) == ExactInt{1}) {
        sample.candidate_r = reduce_to_order(combined, n, a);
      }
    }

    bool new_base = false;
    if (!sample.candidate_r) {
      sample.status = SampleStatus::kTrivial;
    } else if (*sample.candidate_r % 2 != 0) {
      sample.status = SampleStatus::kOddOrder;
      new_base = true;
    } else {
      const ExactInt half = mod_pow(a, *sample.candidate_r / 2, n);
      if (half == n - ExactInt{1}) {
        sample.status = SampleStatus::kMinusOne;
        new_base = true;
      } else {
        sample.status = SampleStatus::kSuccess;
        ExactInt p = gcd(half - ExactInt{1}, n);
        if (p == ExactInt{1} || p == n) p = gcd(half + ExactInt{1}, n);
        report.order = sample.candidate_r;
        report.factors = ordered_pair(p, n);
        report.samples.push_back(std::move(sample));
        return report;
      }
    }
    report.samples.push_back(std::move(sample));
    if (new_base) {
      const auto picked = pick_base(n, tried, rng);
      if (!picked) break;
      a = *picked;
      tried.insert(a);
      combined = 1;
    }
  }
  throw AttemptsExhaustedError("no factor of " + n.to_string() + " after " +
                                   std::to_string(report.attempts) + " attempts",
                               report);
}

std::string factor_report_json(const FactorReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = report.n.to_u64();
  j["a"] = report.a ? ordered_json(report.a->to_u64()) : ordered_json(nullptr);
  j["mode"] = std::string(to_string(report.mode));
  j["register_size"] = report.register_size;
  j["order"] = report.order ? ordered_json(*report.order) : ordered_json(nullptr);
  ordered_json samples = ordered_json::array();
  for (const auto& s : report.samples) {
    ordered_json entry;
    entry["outcome"] = s.outcome;
    entry["candidate_r"] = s.candidate_r ? ordered_json(*s.candidate_r) : ordered_json(nullptr);
    entry["status"] = std::string(to_string(s.status));
    samples.push_back(std::move(entry));
  }
  j["samples"] = std::move(samples);
  j["factors"] = report.factors ? ordered_json::array({report.factors->first.to_u64(),
                                                       report.factors->second.to_u64()})
                                : ordered_json(nullptr);
  j["attempts"] = report.attempts;
  j["seed"] = report.seed;
  return j.dump(2) + "\n";
}

void write_distribution_csv(std::ostream& os, const MeasurementDistribution& dist) {
  os << "v,probability\n";
  for (std::size_t v = 0; v < dist.probabilities.size(); ++v) {
    os << v << ',' << format_real(dist.probabilities[v]) << '\n';
  }
}

}  // namespace hsg
