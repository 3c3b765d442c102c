#include "redfib/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redfib {

int MobiusTable::mobius(std::uint32_t k) const {
  if (k == 0 || k > limit) throw std::out_of_range("mobius: index outside sieve range");
  return mu[k];
}

std::int64_t MobiusTable::mertens_at(std::uint32_t k) const {
  if (k > limit) throw std::out_of_range("mertens_at: index outside sieve range");
  return mertens[k];
}

MobiusTable mobius_sieve(std::uint32_t limit) {
  if (limit == 0) throw std::invalid_argument("mobius_sieve: limit must be positive");
  MobiusTable t;
  t.limit = limit;
  t.mu.assign(limit + 1u, 0);
  t.mu[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1u, false);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      t.mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.mu[ip] = 0;  // p^2 divides ip
        break;
      }
      t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
    }
  }
  t.mertens.assign(limit + 1u, 0);
  for (std::uint32_t k = 1; k <= limit; ++k) t.mertens[k] = t.mertens[k - 1] + t.mu[k];
  return t;
}

std::int64_t mertens(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("mertens: n must be positive");
  return mobius_sieve(n).mertens[n];
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    small.push_back(d);
    if (d != k / d) large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius_divisor_sum(const MobiusTable& table, std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("mobius_divisor_sum: argument must be positive");
  if (d > table.limit) throw std::out_of_range("mobius_divisor_sum: sieve too small");
  int sum = 0;
  for (std::uint64_t e : divisors(d)) sum += table.mu[static_cast<std::uint32_t>(e)];
  return sum;
}

int mobius_divisor_sum(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("mobius_divisor_sum: argument must be positive");
  return mobius_divisor_sum(mobius_sieve(d), d);
}

const BigInt& FibCache::at(std::uint32_t k) const {
  if (k == 0 || k > limit) throw std::out_of_range("FibCache: index outside cache range");
  return fib[k];
}

const BigInt& FibCache::fibonorial_at(std::uint32_t k) const {
  if (k > limit) throw std::out_of_range("FibCache: index outside cache range");
  return fibonorial[k];
}

FibCache fib_cache(std::uint32_t limit) {
  if (limit == 0) throw std::invalid_argument("fib_cache: limit must be positive");
  FibCache c;
  c.limit = limit;
  c.fib.assign(limit + 1u, 0);
  c.fibonorial.assign(limit + 1u, 1);
  c.fib[1] = 1;
  if (limit >= 2) c.fib[2] = 1;
  for (std::uint32_t k = 3; k <= limit; ++k) c.fib[k] = c.fib[k - 1] + c.fib[k - 2];
  for (std::uint32_t k = 1; k <= limit; ++k) c.fibonorial[k] = c.fibonorial[k - 1] * c.fib[k];
  return c;
}

Real zeta(double p, double tol) {
  if (!(p > 1.0)) throw std::invalid_argument("zeta: requires p > 1");
  if (!(tol > 0.0)) throw std::invalid_argument("zeta: tolerance must be positive");

  // Direct sum to K plus the integral and endpoint corrections; with those in
  // place the dropped remainder is below K^-p, so the smallest K with
  // K^-p <= tol certifies the requested tolerance.
  const double k_real = std::pow(tol, -1.0 / p);
  std::uint64_t K = k_real >= 2.0 ? static_cast<std::uint64_t>(std::ceil(k_real)) : 2;
  if (K > 50'000'000ull) throw std::invalid_argument("zeta: tolerance too tight for direct summation");

  const bool integral_p = (p == std::floor(p)) && p <= 4096.0;
  const auto power_term = [&](std::uint64_t k) -> Real {
    if (integral_p) {
      BigInt kp = 1;
      const BigInt base = k;
      for (long e = 0; e < static_cast<long>(p); ++e) kp *= base;
      return Real(1) / Real(kp);
    }
    return exp(Real(-p) * log(Real(k)));
  };

  Real sum = 0;
  for (std::uint64_t k = K; k >= 1; --k) sum += power_term(k);  // ascending magnitude
  const Real tail_K = power_term(K);
  sum += tail_K * Real(K) / Real(p - 1.0);  // integral tail K^(1-p)/(p-1)
  sum -= tail_K / 2;                        // endpoint half-term
  sum += tail_K / Real(K) * Real(p) / 12;   // first Euler-Maclaurin correction
  return sum;
}

}  // namespace redfib
