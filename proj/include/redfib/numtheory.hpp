#ifndef REDFIB_NUMTHEORY_HPP
#define REDFIB_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "redfib/scalar.hpp"

namespace redfib {

// Moebius values mu(1..limit) from a linear sieve, plus Mertens prefix sums.
// Immutable after construction; safe to share across threads read-only.
struct MobiusTable {
  std::uint32_t limit = 0;
  std::vector<std::int8_t> mu;        // mu[k] for 1 <= k <= limit, mu[0] unused
  std::vector<std::int64_t> mertens;  // mertens[k] = sum of mu[1..k], mertens[0] = 0

  int mobius(std::uint32_t k) const;
  std::int64_t mertens_at(std::uint32_t k) const;
};

// Thin error type for "this operation requires an exact sequence".
struct unsupported_exact : std::domain_error {
  using std::domain_error::domain_error;
};

MobiusTable mobius_sieve(std::uint32_t limit);

// Convenience wrapper: M(n) via a fresh sieve.
std::int64_t mertens(std::uint32_t n);

// All positive divisors of k, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t k);

// Sum of mu(d/m) over divisors m of d: 1 for d = 1, 0 otherwise.
int mobius_divisor_sum(const MobiusTable& table, std::uint32_t d);
int mobius_divisor_sum(std::uint32_t d);

// Fibonacci numbers F_1..F_limit (F_1 = F_2 = 1) and their running products
// (fibonorials), all exact.
struct FibCache {
  std::uint32_t limit = 0;
  std::vector<BigInt> fib;         // fib[k] for 1 <= k <= limit, fib[0] unused
  std::vector<BigInt> fibonorial;  // fibonorial[k] = fib[1] * ... * fib[k], [0] = 1

  const BigInt& at(std::uint32_t k) const;
  const BigInt& fibonorial_at(std::uint32_t k) const;
};

FibCache fib_cache(std::uint32_t limit);

// Riemann zeta for real p > 1 by direct summation with a certified truncation:
// the cutoff K is chosen so the dropped tail is below tol.
Real zeta(double p, double tol);

}  // namespace redfib

#endif
