#include "hsg/arithmetic.hpp"

#include <string>

#include "hsg/errors.hpp"

namespace hsg {

namespace {

using Rep = ExactInt::Rep;

Rep add_mod(Rep x, Rep y, Rep n) {
  // x, y < n <= 2^127 - 1, so x + y < 2^128.
  const Rep s = x + y;
  return s >= n ? s - n : s;
}

}  // namespace

ExactInt gcd(ExactInt a, ExactInt b) {
  Rep x = a.rep();
  Rep y = b.rep();
  while (y != 0) {
    const Rep t = x % y;
    x = y;
    y = t;
  }
  return ExactInt::from_rep(x);
}

ExactInt mul_mod(ExactInt a, ExactInt b, ExactInt n) {
  if (n.is_zero()) throw DomainError("modulus must be positive");
  const Rep m = n.rep();
  Rep x = a.rep() % m;
  Rep y = b.rep() % m;
  constexpr Rep kHalf = Rep{1} << 64;
  if (x < kHalf && y < kHalf) return ExactInt::from_rep((x * y) % m);
  Rep acc = 0;
  while (y != 0) {
    if (y & 1) acc = add_mod(acc, x, m);
    x = add_mod(x, x, m);
    y >>= 1;
  }
  return ExactInt::from_rep(acc);
}

ExactInt mod_pow(ExactInt base, std::uint64_t exponent, ExactInt n) {
  if (n < ExactInt{2}) throw DomainError("mod_pow requires modulus >= 2");
  ExactInt result{1};
  ExactInt b = base % n;
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(ExactInt a, ExactInt n) {
  if (n < ExactInt{2}) throw DomainError("multiplicative_order requires modulus >= 2");
  if (gcd(a, n) != ExactInt{1}) {
    throw DomainError("multiplicative_order requires gcd(a, N) = 1, got a=" + a.to_string() +
                      " N=" + n.to_string());
  }
  const ExactInt base = a % n;
  ExactInt power = base;
  const std::uint64_t limit = n.fits_u64() ? n.to_u64() : UINT64_MAX;
  for (std::uint64_t r = 1; r <= limit; ++r) {
    if (power == ExactInt{1}) return r;
    power = mul_mod(power, base, n);
  }
  throw DomainError("multiplicative order search exceeded N iterations");
}

ExactInt PrimePower::value() const {
  ExactInt v{1};
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

PrimeFactorization::PrimeFactorization(ExactInt n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("prime exponent must be positive");
    if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime)) {
      throw DomainError("primes must be distinct and ascending");
    }
  }
  if (product() != n_) throw DomainError("factorization does not multiply to " + n_.to_string());
}

bool PrimeFactorization::square_free() const {
  for (const auto& f : factors_) {
    if (f.exponent != 1) return false;
  }
  return true;
}

std::vector<ExactInt> PrimeFactorization::multiples() const {
  std::vector<ExactInt> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(n_ / f.prime);
  return out;
}

ExactInt PrimeFactorization::product() const {
  ExactInt p{1};
  for (const auto& f : factors_) p *= f.value();
  return p;
}

PrimeFactorization factorize(ExactInt n) {
  if (n < ExactInt{2}) throw DomainError("factorize requires N >= 2");
  std::vector<PrimePower> factors;
  Rep rest = n.rep();
  for (Rep d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    factors.push_back({ExactInt::from_rep(d), e});
  }
  if (rest > 1) factors.push_back({ExactInt::from_rep(rest), 1});
  return PrimeFactorization(n, std::move(factors));
}

bool is_prime(ExactInt n) {
  if (n < ExactInt{2}) return false;
  return factorize(n).is_prime();
}

std::optional<PerfectPower> perfect_power(ExactInt n) {
  if (n < ExactInt{4}) return std::nullopt;
  const Rep target = n.rep();
  for (unsigned k = 127; k >= 2; --k) {
    // Binary search for the integer k-th root.
    Rep lo = 1;
    Rep hi = Rep{1} << (127 / k + 1);
    while (lo <= hi) {
      const Rep mid = lo + (hi - lo) / 2;
      // mid^k compared against target without overflow.
      Rep acc = 1;
      bool above = false;
      for (unsigned i = 0; i < k; ++i) {
        if (acc > target / mid) {
          above = true;
          break;
        }
        acc *= mid;
      }
      if (!above && acc == target) return PerfectPower{ExactInt::from_rep(mid), k};
      if (above || acc > target) {
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
  }
  return std::nullopt;
}

std::vector<Convergent> convergents(std::uint64_t v, std::uint64_t m) {
  if (m == 0) throw DomainError("convergents require M >= 1");
  if (v >= m) {
    throw DomainError("convergents require v < M, got v=" + std::to_string(v) +
                      " M=" + std::to_string(m));
  }
  std::vector<Convergent> out;
  // p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1
  Rep p_prev = 1, q_prev = 0;
  Rep p_prev2 = 0, q_prev2 = 1;
  Rep num = v, den = m;
  while (true) {
    const Rep term = num / den;
    const Rep p = term * p_prev + p_prev2;
    const Rep q = term * q_prev + q_prev2;
    // q_1 = q_0 = 1 when the first partial quotient after the integer part is
    // 1; keep only the closer of the two so denominators strictly increase.
    if (!out.empty() && out.back().denominator.rep() == q) out.pop_back();
    out.push_back({ExactInt::from_rep(p), ExactInt::from_rep(q)});
    const Rep rem = num % den;
    if (rem == 0) break;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    num = den;
    den = rem;
  }
  return out;
}

}  // namespace hsg
