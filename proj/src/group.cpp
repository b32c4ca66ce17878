#include "hsg/group.hpp"

#include <numeric>
#include <string>

#include "hsg/errors.hpp"

namespace hsg {

namespace {

void require_same_group(GroupElement g, GroupElement h) {
  if (g.order != h.order) {
    throw DomainError("elements belong to different groups (orders " + std::to_string(g.order) +
                      " and " + std::to_string(h.order) + ")");
  }
}

void require_matching(GroupElement k, const PrimeFactorization& f) {
  if (f.n() != ExactInt{k.order}) {
    throw DomainError("factorization of " + f.n().to_string() + " does not match group order " +
                      std::to_string(k.order));
  }
}

// Modular inverse of x mod m for coprime x, m (small m).
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(x % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("no modular inverse");
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t mul_mod_u64(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

}  // namespace

CyclicGroup::CyclicGroup(std::uint64_t order) : order_(order) {
  if (order == 0) throw DomainError("group order must be >= 1");
}

GroupElement CyclicGroup::element(std::uint64_t k) const { return {order_, k % order_}; }

GroupElement compose(GroupElement g, GroupElement h) {
  require_same_group(g, h);
  const std::uint64_t m = g.order;
  const std::uint64_t sum = g.index + h.index;  // both < m
  return {m, sum >= m || sum < g.index ? sum - m : sum};
}

GroupElement inverse(GroupElement g) { return {g.order, (g.order - g.index) % g.order}; }

std::vector<GroupElement> subgroup_generated(GroupElement g) {
  const std::uint64_t step = std::gcd(g.order, g.index);  // <g> = <gcd(M, k)>
  const std::uint64_t size = g.order / step;
  std::vector<GroupElement> out;
  out.reserve(size);
  for (std::uint64_t t = 0; t < size; ++t) out.push_back({g.order, t * step});
  return out;
}

std::vector<Coset> coset_partition(const CyclicGroup& group, GroupElement subgroup_generator) {
  if (subgroup_generator.order != group.order()) {
    throw DomainError("subgroup generator is not an element of the group");
  }
  const std::uint64_t m = group.order();
  const auto subgroup = subgroup_generated(subgroup_generator);
  // Cosets of <g> are the residue classes mod gcd(M, k); members listed by
  // successive powers of the generator.
  const std::uint64_t count = m / subgroup.size();
  std::vector<Coset> cosets;
  cosets.reserve(count);
  for (std::uint64_t rep = 0; rep < count; ++rep) {
    Coset c;
    c.representative = group.element(rep);
    c.subgroup_generator = subgroup_generator;
    GroupElement cur = c.representative;
    for (std::size_t t = 0; t < subgroup.size(); ++t) {
      c.members.push_back(cur);
      cur = compose(cur, subgroup_generator);
    }
    cosets.push_back(std::move(c));
  }
  return cosets;
}

std::vector<std::uint64_t> crt_residues(GroupElement k, const PrimeFactorization& factorization) {
  require_matching(k, factorization);
  std::vector<std::uint64_t> out;
  out.reserve(factorization.size());
  for (const auto& f : factorization.factors()) out.push_back(k.index % f.value().to_u64());
  return out;
}

std::vector<std::uint64_t> crt_residues(GroupElement k) {
  if (k.order < 2) return {};
  return crt_residues(k, factorize(k.order));
}

GroupElement crt_reconstruct(const std::vector<std::uint64_t>& residues,
                             const PrimeFactorization& factorization) {
  if (residues.size() != factorization.size()) throw DomainError("residue count mismatch");
  const std::uint64_t n = factorization.n().to_u64();
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t q = factorization.factors()[i].value().to_u64();
    if (residues[i] >= q) throw DomainError("residue out of range");
    const std::uint64_t rest = n / q;
    const std::uint64_t coeff = mul_mod_u64(rest, inverse_mod(rest % q, q), n);
    k = (k + mul_mod_u64(coeff, residues[i], n)) % n;
  }
  return {n, k};
}

std::vector<std::uint64_t> subgroup_decompose(GroupElement k,
                                              const PrimeFactorization& factorization) {
  require_matching(k, factorization);
  if (!factorization.square_free()) {
    throw DomainError("subgroup decomposition requires square-free N, got " +
                      factorization.n().to_string());
  }
  // k = sum_i m_i k_i (mod N) reduces mod b_i to k = m_i k_i (mod b_i).
  std::vector<std::uint64_t> out;
  out.reserve(factorization.size());
  const std::uint64_t n = factorization.n().to_u64();
  for (const auto& f : factorization.factors()) {
    const std::uint64_t b = f.prime.to_u64();
    const std::uint64_t m = n / b;
    out.push_back(mul_mod_u64(k.index % b, inverse_mod(m % b, b), b));
  }
  return out;
}

std::vector<std::uint64_t> subgroup_decompose(GroupElement k) {
  if (k.order < 2) return {};
  return subgroup_decompose(k, factorize(k.order));
}

GroupElement subgroup_compose(const std::vector<std::uint64_t>& coefficients,
                              const PrimeFactorization& factorization) {
  if (!factorization.square_free()) throw DomainError("subgroup composition requires square-free N");
  if (coefficients.size() != factorization.size()) throw DomainError("coefficient count mismatch");
  const std::uint64_t n = factorization.n().to_u64();
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const std::uint64_t b = factorization.factors()[i].prime.to_u64();
    if (coefficients[i] >= b) throw DomainError("subgroup coefficient out of range");
    k = (k + mul_mod_u64(n / b, coefficients[i], n)) % n;
  }
  return {n, k};
}

namespace {

std::uint64_t validated_order(ExactInt n, ExactInt a) {
  if (n < ExactInt{2}) throw DomainError("extended group requires N >= 2");
  if (a < ExactInt{2}) throw DomainError("extended group requires a >= 2");
  if (gcd(n, a) != ExactInt{1}) {
    throw DomainError("extended group requires coprime N and a, got N=" + n.to_string() +
                      " a=" + a.to_string());
  }
  const ExactInt order = n * a;
  if (!order.fits_u64()) throw OverflowError("group order aN does not fit in 64 bits");
  return order.to_u64();
}

}  // namespace

ExtendedGroupSpec::ExtendedGroupSpec(ExactInt n, ExactInt a)
    : n_(n), a_(a), order_(validated_order(n, a)), factorization_(factorize(n)) {}

GroupElement ExtendedGroupSpec::subgroup_a_generator() const { return {order_, n_.to_u64()}; }
GroupElement ExtendedGroupSpec::subgroup_n_generator() const { return {order_, a_.to_u64()}; }

SliceCoordinates slice_coordinates(std::uint64_t x, const ExtendedGroupSpec& spec,
                                   SliceConvention convention) {
  const std::uint64_t reduced = x % spec.order();
  const std::uint64_t base =
      convention == SliceConvention::kByN ? spec.a().to_u64() : spec.n().to_u64();
  return {reduced % base, reduced / base};
}

std::uint64_t slice_recompose(SliceCoordinates coords, const ExtendedGroupSpec& spec,
                              SliceConvention convention) {
  const std::uint64_t base =
      convention == SliceConvention::kByN ? spec.a().to_u64() : spec.n().to_u64();
  const std::uint64_t outer_bound = spec.order() / base;
  if (coords.inner >= base || coords.outer >= outer_bound) {
    throw DomainError("slice coordinates out of range");
  }
  return coords.inner + coords.outer * base;
}

}  // namespace hsg
