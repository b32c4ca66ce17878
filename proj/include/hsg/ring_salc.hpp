#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <ostream>
#include <vector>

#include "hsg/arithmetic.hpp"
#include "hsg/group.hpp"
#include "hsg/representations.hpp"

namespace hsg {

/// Nearest-neighbour tight-binding ring: H[i][i] = onsite,
/// H[i][i +- 1 mod n] = hopping. This is a stand-in model for molecules with
/// N-fold rotational symmetry (benzene for n = 6, a 15-unit periodic polyene
/// for n = 15); only its symmetry matters for the SALC construction.
struct RingSpec {
  std::uint64_t n_sites = 6;
  double onsite = 0.0;
  double hopping = -1.0;  // Hueckel sign: j = 0 is the lowest mode
};

struct OrbitalVector {
  std::vector<Complex> coefficients;
  double norm = 0.0;       // norm before normalization
  bool zero_norm = false;  // coefficients left un-normalized
};

struct RingMode {
  std::uint64_t j = 0;
  double energy = 0.0;
  OrbitalVector orbital;
};

/// For n = 2 both ring edges join the same pair of sites; they are collapsed
/// into a single coupling.
Eigen::MatrixXd build_ring_hamiltonian(const RingSpec& spec);

/// Fourier modes exp(2*pi*i*j*s/n)/sqrt(n) with energy onsite + 2*hopping*cos(2*pi*j/n)
/// (onsite +- hopping for n = 2).
std::vector<RingMode> analytic_modes(const RingSpec& spec);

struct RingDiagonalization {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns
};
RingDiagonalization diagonalize_ring(const RingSpec& spec);

/// Comparison of one degenerate class of analytic modes against the
/// numerically computed eigenvectors with matching energy. Compared through
/// subspace projectors because eigenvectors inside a degenerate subspace are
/// only defined up to rotation.
struct SubspaceComparison {
  std::vector<std::uint64_t> mode_class;
  double energy = 0.0;
  std::size_t numeric_dimension = 0;
  double projector_deviation = 0.0;  // max-abs entry of P_numeric - P_analytic
};
std::vector<SubspaceComparison> compare_degenerate_subspaces(const RingSpec& spec,
                                                             double energy_tolerance = 1e-8);

/// {0}, {j, n-j} for 0 < j < n/2, and {n/2} for even n.
std::vector<std::vector<std::uint64_t>> degeneracy_pattern(std::uint64_t n);

/// P^(j) applied to an atomic-orbital profile, normalized.
OrbitalVector salc(IrrepLabel label, const GroupFunction& ao_profile);
OrbitalVector salc_via_primes(IrrepLabel label, const GroupFunction& ao_profile,
                              const PrimeFactorization& factorization);

/// Whether the j-symmetric projection of a single-slice orbital on G^{N,a}
/// takes the same value at slices x1 and x2 (true iff j (x1 - x2) = 0 mod aN).
bool salc_coset_equality(IrrepLabel label, const ExtendedGroupSpec& spec, std::uint64_t x1,
                         std::uint64_t x2, double tolerance = 1e-12);

/// CSV: j,energy,site,re,im
void write_modes_csv(std::ostream& os, const std::vector<RingMode>& modes);
/// CSV: j,site,re,im
void write_salc_csv(std::ostream& os, const std::vector<std::pair<std::uint64_t, OrbitalVector>>& salcs);

}  // namespace hsg
