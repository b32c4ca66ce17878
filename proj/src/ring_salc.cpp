#include "hsg/ring_salc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hsg/errors.hpp"
#include "hsg/format.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

namespace {

constexpr double kZeroNorm = 1e-14;

void require_ring(const RingSpec& spec) {
  if (spec.n_sites < 2) throw DomainError("ring needs at least 2 sites");
}

OrbitalVector normalized(const GroupFunction& f) {
  OrbitalVector out;
  out.coefficients = f.values;
  double sq = 0.0;
  for (const auto& c : f.values) sq += std::norm(c);
  out.norm = std::sqrt(sq);
  if (out.norm < kZeroNorm) {
    out.zero_norm = true;
    return out;
  }
  for (auto& c : out.coefficients) c /= out.norm;
  return out;
}

Eigen::MatrixXcd class_projector(const std::vector<RingMode>& modes,
                                 const std::vector<std::uint64_t>& mode_class, std::uint64_t n) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (auto j : mode_class) {
    const auto& c = modes[j].orbital.coefficients;
    for (std::uint64_t r = 0; r < n; ++r) {
      for (std::uint64_t s = 0; s < n; ++s) {
        p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) += c[r] * std::conj(c[s]);
      }
    }
  }
  return p;
}

}  // namespace

Eigen::MatrixXd build_ring_hamiltonian(const RingSpec& spec) {
  require_ring(spec);
  const auto n = static_cast<Eigen::Index>(spec.n_sites);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i, i) = spec.onsite;
    const Eigen::Index next = (i + 1) % n;
    h(i, next) = spec.hopping;
    h(next, i) = spec.hopping;
  }
  return h;
}

std::vector<RingMode> analytic_modes(const RingSpec& spec) {
  require_ring(spec);
  const std::uint64_t n = spec.n_sites;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<RingMode> modes;
  modes.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    RingMode mode;
    mode.j = j;
    const double coupling = n == 2 ? spec.hopping : 2.0 * spec.hopping;
    mode.energy = spec.onsite + coupling * kernels::unit_root(std::min(j, n - j), n).real();
    mode.orbital.coefficients.resize(n);
    for (std::uint64_t s = 0; s < n; ++s) {
      mode.orbital.coefficients[s] =
          kernels::unit_root(static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * s % n), n) *
          inv_sqrt_n;
    }
    mode.orbital.norm = 1.0;
    modes.push_back(std::move(mode));
  }
  return modes;
}

RingDiagonalization diagonalize_ring(const RingSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_ring_hamiltonian(spec));
  if (solver.info() != Eigen::Success) throw Error("ring diagonalization failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<SubspaceComparison> compare_degenerate_subspaces(const RingSpec& spec,
                                                             double energy_tolerance) {
  const auto modes = analytic_modes(spec);
  const auto diag = diagonalize_ring(spec);
  const std::uint64_t n = spec.n_sites;
  std::vector<SubspaceComparison> out;
  for (const auto& mode_class : degeneracy_pattern(n)) {
    SubspaceComparison cmp;
    cmp.mode_class = mode_class;
    cmp.energy = modes[mode_class.front()].energy;
    const Eigen::MatrixXcd analytic = class_projector(modes, mode_class, n);
    Eigen::MatrixXd numeric = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index c = 0; c < diag.eigenvalues.size(); ++c) {
      if (std::abs(diag.eigenvalues(c) - cmp.energy) > energy_tolerance) continue;
      numeric += diag.eigenvectors.col(c) * diag.eigenvectors.col(c).transpose();
      ++cmp.numeric_dimension;
    }
    cmp.projector_deviation = (numeric.cast<Complex>() - analytic).cwiseAbs().maxCoeff();
    out.push_back(std::move(cmp));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> degeneracy_pattern(std::uint64_t n) {
  if (n < 2) throw DomainError("degeneracy pattern needs n >= 2");
  std::vector<std::vector<std::uint64_t>> classes;
  classes.push_back({0});
  for (std::uint64_t j = 1; 2 * j < n; ++j) classes.push_back({j, n - j});
  if (n % 2 == 0) classes.push_back({n / 2});
  return classes;
}

OrbitalVector salc(IrrepLabel label, const GroupFunction& ao_profile) {
  return normalized(project(label, ao_profile));
}

OrbitalVector salc_via_primes(IrrepLabel label, const GroupFunction& ao_profile,
                              const PrimeFactorization& factorization) {
  return normalized(project_via_primes(label, ao_profile, factorization));
}

bool salc_coset_equality(IrrepLabel label, const ExtendedGroupSpec& spec, std::uint64_t x1,
                         std::uint64_t x2, double tolerance) {
  const std::uint64_t m = spec.order();
  if (label.order != m) throw DomainError("irrep label order must equal aN");
  if (x1 >= m || x2 >= m) throw DomainError("slice index must be < aN");
  // Project the orbital sitting on slice 0; its j-component is exp(2 pi i j x / M) / M.
  const GroupFunction projected = project(label, GroupFunction::delta(m, 0));
  const double scale = static_cast<double>(m);
  return std::abs(projected[x1] - projected[x2]) * scale <= tolerance;
}

void write_modes_csv(std::ostream& os, const std::vector<RingMode>& modes) {
  os << "j,energy,site,re,im\n";
  for (const auto& mode : modes) {
    for (std::size_t s = 0; s < mode.orbital.coefficients.size(); ++s) {
      const auto& c = mode.orbital.coefficients[s];
      os << mode.j << ',' << format_real(mode.energy) << ',' << s << ',' << format_real(c.real())
         << ',' << format_real(c.imag()) << '\n';
    }
  }
}

void write_salc_csv(std::ostream& os,
                    const std::vector<std::pair<std::uint64_t, OrbitalVector>>& salcs) {
  os << "j,site,re,im\n";
  for (const auto& [j, orbital] : salcs) {
    for (std::size_t s = 0; s < orbital.coefficients.size(); ++s) {
      const auto& c = orbital.coefficients[s];
      os << j << ',' << s << ',' << format_real(c.real()) << ',' << format_real(c.imag()) << '\n';
    }
  }
}

}  // namespace hsg
