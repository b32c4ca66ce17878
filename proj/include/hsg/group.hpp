#pragma once

#include <cstdint>
#include <vector>

#include "hsg/arithmetic.hpp"
#include "hsg/exact_int.hpp"

namespace hsg {

/// Element k of the rotation group of order M, i.e. C_M^k = R_z(2*pi*k/M).
/// Indices are canonical in [0, M) and 0 is the identity E.
struct GroupElement {
  std::uint64_t order = 1;
  std::uint64_t index = 0;

  bool operator==(const GroupElement&) const = default;
};

class CyclicGroup {
public:
  explicit CyclicGroup(std::uint64_t order);

  std::uint64_t order() const { return order_; }
  GroupElement element(std::uint64_t k) const;  // reduces k mod M
  GroupElement identity() const { return {order_, 0}; }
  GroupElement generator() const { return element(1); }

  bool operator==(const CyclicGroup&) const = default;

private:
  std::uint64_t order_;
};

GroupElement compose(GroupElement g, GroupElement h);
GroupElement inverse(GroupElement g);

/// Cyclic subgroup <g> in ascending index order; size M / gcd(M, k).
std::vector<GroupElement> subgroup_generated(GroupElement g);

struct Coset {
  GroupElement representative;  // smallest member index
  GroupElement subgroup_generator;
  std::vector<GroupElement> members;  // representative * g^t for t = 0, 1, ...
};

/// Disjoint cosets of <subgroup_generator> covering the group, sorted by
/// representative.
std::vector<Coset> coset_partition(const CyclicGroup& group, GroupElement subgroup_generator);

/// (k mod b_i^{e_i}) for every prime power of the parent order.
std::vector<std::uint64_t> crt_residues(GroupElement k, const PrimeFactorization& factorization);
std::vector<std::uint64_t> crt_residues(GroupElement k);
/// Inverse of crt_residues.
GroupElement crt_reconstruct(const std::vector<std::uint64_t>& residues,
                             const PrimeFactorization& factorization);

/// Unique (k_1, ..., k_m), k_i in [0, b_i), with k = sum_i (N/b_i) k_i (mod N).
/// Square-free N only; throws DomainError otherwise.
std::vector<std::uint64_t> subgroup_decompose(GroupElement k, const PrimeFactorization& factorization);
std::vector<std::uint64_t> subgroup_decompose(GroupElement k);
GroupElement subgroup_compose(const std::vector<std::uint64_t>& coefficients,
                              const PrimeFactorization& factorization);

/// The group G^{N,a} of order aN built from coprime N and a.
class ExtendedGroupSpec {
public:
  ExtendedGroupSpec(ExactInt n, ExactInt a);

  ExactInt n() const { return n_; }
  ExactInt a() const { return a_; }
  std::uint64_t order() const { return order_; }
  const PrimeFactorization& factorization() const { return factorization_; }
  CyclicGroup group() const { return CyclicGroup(order_); }
  // C_a = C_{aN}^N generates the copy of G^a; C_N = C_{aN}^a generates G^N.
  GroupElement subgroup_a_generator() const;
  GroupElement subgroup_n_generator() const;

private:
  ExactInt n_;
  ExactInt a_;
  std::uint64_t order_;
  PrimeFactorization factorization_;
};

enum class SliceConvention {
  kByN,  // x = inner + outer * a, inner in [0, a), outer in [0, N)
  kByA,  // x = inner + outer * N, inner in [0, N), outer in [0, a)
};

struct SliceCoordinates {
  std::uint64_t inner = 0;
  std::uint64_t outer = 0;
  bool operator==(const SliceCoordinates&) const = default;
};

/// Coordinates of slice x (reduced mod aN) in either coset decomposition.
SliceCoordinates slice_coordinates(std::uint64_t x, const ExtendedGroupSpec& spec,
                                   SliceConvention convention);
std::uint64_t slice_recompose(SliceCoordinates coords, const ExtendedGroupSpec& spec,
                              SliceConvention convention);

}  // namespace hsg
