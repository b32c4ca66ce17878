#include "hsg/hidden_subgroup.hpp"

#include <cmath>
#include <string>

#include "hsg/arithmetic.hpp"
#include "hsg/errors.hpp"
#include "hsg/format.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

CosetLabel oracle_eval(const OracleSpec& spec, std::uint64_t x) {
  ExactInt power{1};
  ExactInt base = spec.a();
  std::uint64_t e = x;
  // Exact square-and-multiply; the running square is only formed when a
  // higher bit of x still needs it, so no spurious overflow is raised.
  while (e != 0) {
    if (e & 1) power *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  CosetLabel label{power / spec.n(), power % spec.n()};
  if (label.beta != mod_pow(spec.a(), x, spec.n())) {
    throw Error("oracle residue disagrees with mod_pow at x=" + std::to_string(x));
  }
  return label;
}

std::vector<ExactInt> residue_sequence(const OracleSpec& spec, std::uint64_t length) {
  std::vector<ExactInt> out;
  out.reserve(length);
  ExactInt value = ExactInt{1} % spec.n();
  const ExactInt base = spec.a() % spec.n();
  for (std::uint64_t x = 0; x < length; ++x) {
    out.push_back(value);
    value = mul_mod(value, base, spec.n());
  }
  return out;
}

std::uint64_t default_window(const OracleSpec& spec) { return 4 * spec.extended().order(); }

PeriodReport verify_period_subgroup(const OracleSpec& spec, std::uint64_t window) {
  PeriodReport report;
  report.order = multiplicative_order(spec.a(), spec.n());
  report.window = window;
  if (window < 2 * report.order) {
    throw DomainError("window " + std::to_string(window) + " must cover two periods (r=" +
                      std::to_string(report.order) + ")");
  }
  const auto values = residue_sequence(spec, window);
  for (std::uint64_t x1 = 0; x1 < window; ++x1) {
    for (std::uint64_t x2 = x1 + 1; x2 < window; ++x2) {
      const bool same_value = values[x1] == values[x2];
      const bool same_class = (x2 - x1) % report.order == 0;
      if (same_value != same_class) {
        if (!report.first_violation) report.first_violation = {x1, x2};
        ++report.violations;
      }
    }
  }
  return report;
}

std::vector<std::complex<double>> residue_spectrum(const OracleSpec& spec, std::uint64_t length,
                                                   ExactInt residue) {
  if (length == 0) throw DomainError("spectrum window must be >= 1");
  const auto values = residue_sequence(spec, length);
  std::vector<std::complex<double>> indicator(length);
  for (std::uint64_t x = 0; x < length; ++x) indicator[x] = values[x] == residue ? 1.0 : 0.0;
  return kernels::parallel::dft(indicator, +1, 1.0 / std::sqrt(static_cast<double>(length)));
}

void write_spectrum_csv(std::ostream& os, const std::vector<std::complex<double>>& spectrum) {
  os << "index,magnitude_squared\n";
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    os << k << ',' << format_real(std::norm(spectrum[k])) << '\n';
  }
}

}  // namespace hsg
