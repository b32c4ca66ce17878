#pragma once

// Reference implementations used only by tests. They share no code with the
// library and favour obviousness over speed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Decimal big integers as little-endian digit strings.
inline std::string dec_mul_small(const std::string& digits, unsigned m) {
  std::string out;
  unsigned carry = 0;
  for (char c : digits) {
    const unsigned v = static_cast<unsigned>(c - '0') * m + carry;
    out.push_back(static_cast<char>('0' + v % 10));
    carry = v / 10;
  }
  while (carry) {
    out.push_back(static_cast<char>('0' + carry % 10));
    carry /= 10;
  }
  return out;
}

// a^x in decimal, most significant digit first.
inline std::string dec_pow(unsigned a, unsigned x) {
  std::string le = "1";
  for (unsigned i = 0; i < x; ++i) le = dec_mul_small(le, a);
  while (le.size() > 1 && le.back() == '0') le.pop_back();
  return {le.rbegin(), le.rend()};
}

// Schoolbook long division of a decimal string by a small divisor.
inline std::pair<std::string, unsigned> dec_divmod(const std::string& digits, unsigned d) {
  std::string q;
  unsigned long long r = 0;
  for (char c : digits) {
    r = r * 10 + static_cast<unsigned>(c - '0');
    q.push_back(static_cast<char>('0' + r / d));
    r %= d;
  }
  const auto first = q.find_first_not_of('0');
  q = first == std::string::npos ? "0" : q.substr(first);
  return {q, static_cast<unsigned>(r)};
}

inline std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = 1;
  for (std::uint64_t d = 1; d <= std::max(a, b); ++d) {
    if (a % d == 0 && b % d == 0) g = d;
  }
  return std::max(a, b) == 0 ? 0 : g;
}

inline std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t v = a % n;
  for (std::uint64_t r = 1; r <= n; ++r) {
    if (v == 1 % n) return r;
    v = v * a % n;
  }
  return 0;
}

inline std::uint64_t naive_pow_mod(std::uint64_t a, std::uint64_t x, std::uint64_t n) {
  std::uint64_t v = 1 % n;
  for (std::uint64_t i = 0; i < x; ++i) v = v * (a % n) % n;
  return v;
}

inline std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::complex<long double> root(long double turns) {
  const long double t = 2.0L * std::numbers::pi_v<long double> * turns;
  return {std::cos(t), std::sin(t)};
}

// |sum_x in[x] exp(2 pi i v x / M)|^2 / M in extended precision.
inline std::vector<double> brute_qft_probabilities(const std::vector<std::complex<double>>& in) {
  const std::size_t m = in.size();
  std::vector<double> out(m);
  for (std::size_t v = 0; v < m; ++v) {
    std::complex<long double> acc = 0;
    for (std::size_t x = 0; x < m; ++x) {
      if (in[x] == 0.0) continue;
      acc += std::complex<long double>(in[x]) *
             root(static_cast<long double>((v * x) % m) / static_cast<long double>(m));
    }
    out[v] = static_cast<double>(std::norm(acc) / static_cast<long double>(m));
  }
  return out;
}

// (1/M) sum_k exp(2 pi i j k / M) f[x - k]
inline std::vector<std::complex<double>> brute_projection(std::uint64_t j,
                                                          const std::vector<std::complex<double>>& f) {
  const std::size_t m = f.size();
  std::vector<std::complex<double>> out(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::complex<long double> acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
      acc += root(static_cast<long double>((j * k) % m) / m) *
             std::complex<long double>(f[(x + m - k) % m]);
    }
    out[x] = std::complex<double>(acc / static_cast<long double>(m));
  }
  return out;
}

inline std::vector<std::complex<double>> random_complex(std::size_t m, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> f(m);
  for (auto& v : f) v = {u(gen), u(gen)};
  return f;
}

inline double max_diff(const std::vector<std::complex<double>>& a,
                       const std::vector<std::complex<double>>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace oracle
