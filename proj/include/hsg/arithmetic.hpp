#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsg/exact_int.hpp"

namespace hsg {

ExactInt gcd(ExactInt a, ExactInt b);

/// (a * b) mod n without forming the full product; valid for any n <= 2^127 - 1.
ExactInt mul_mod(ExactInt a, ExactInt b, ExactInt n);

/// base^exponent mod n by square-and-multiply. Throws DomainError for n < 2.
ExactInt mod_pow(ExactInt base, std::uint64_t exponent, ExactInt n);

/// Smallest r >= 1 with a^r = 1 (mod n). Iterates at most n steps.
/// Throws DomainError when gcd(a, n) != 1 or n < 2.
std::uint64_t multiplicative_order(ExactInt a, ExactInt n);

struct PrimePower {
  ExactInt prime;
  unsigned exponent = 0;

  ExactInt value() const;  // prime^exponent
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with distinct primes in ascending order.
class PrimeFactorization {
public:
  PrimeFactorization(ExactInt n, std::vector<PrimePower> factors);

  ExactInt n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  bool square_free() const;
  bool is_prime() const { return factors_.size() == 1 && factors_.front().exponent == 1; }
  // m_i = N / b_i for every prime b_i.
  std::vector<ExactInt> multiples() const;
  ExactInt product() const;

private:
  ExactInt n_;
  std::vector<PrimePower> factors_;
};

/// Deterministic trial division up to sqrt(n). Throws DomainError for n < 2.
PrimeFactorization factorize(ExactInt n);

bool is_prime(ExactInt n);

/// Returns (m, k) with m^k = n and k >= 2 maximal, if n is a perfect power.
struct PerfectPower {
  ExactInt root;
  unsigned exponent = 0;
};
std::optional<PerfectPower> perfect_power(ExactInt n);

struct Convergent {
  ExactInt numerator;
  ExactInt denominator;
  bool operator==(const Convergent&) const = default;
};

/// Every continued-fraction convergent of v/m, in order. The last one is v/m
/// in lowest terms. Throws DomainError unless 0 <= v < m.
std::vector<Convergent> convergents(std::uint64_t v, std::uint64_t m);

}  // namespace hsg
