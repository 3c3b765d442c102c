#include "redfib/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "redfib/determinant.hpp"
#include "redfib/numtheory.hpp"
#include "redfib/spectral.hpp"

namespace redfib {

Real golden_ratio() {
  static const Real phi = (Real(1) + sqrt(Real(5))) / 2;
  return phi;
}

Real euler_gamma() {
  static const Real gamma("0.57721566490153286060651209008240243104215933593992");
  return gamma;
}

AsymptoticReport constant_C(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("constant_C: tolerance must be positive");
  const Real phi = golden_ratio();
  // Smallest k0 with phi^(2-k0)/(phi-1) <= tol; the bound covers everything
  // past the k0-th term because F_k >= phi^(k-2).
  std::uint32_t k0 = 3;
  Real bound = pow(phi, 2 - static_cast<int>(k0)) / (phi - 1);
  while (bound > tol) {
    ++k0;
    bound /= phi;
    if (k0 > 200000) throw std::invalid_argument("constant_C: tolerance too tight");
  }
  const MobiusTable mob = mobius_sieve(k0);
  const FibCache fc = fib_cache(k0);
  Rational sum = 0;
  for (std::uint32_t k = 1; k <= k0; ++k)
    if (mob.mu[k] != 0) sum += Rational(mob.mu[k]) / Rational(fc.fib[k]);

  AsymptoticReport rep;
  rep.name = "C";
  rep.value = to_real(sum);
  rep.error_bound = bound;
  rep.truncation = k0;
  return rep;
}

AsymptoticReport constant_C_phi(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("constant_C_phi: tolerance must be positive");
  const Real phi = golden_ratio();
  const Real absb = Real(1) / (phi * phi);

  // |ln prod_{k>K} (1 - b^k)| <= |b|^(K+1) / ((1-|b|)(1-|b|^(K+1))); grow K
  // until the induced absolute error on the partial product is within tol.
  std::uint32_t K = 1;
  Real product = 1;
  Real bk = -absb;  // b^k, signed
  product *= (Real(1) - bk);
  while (true) {
    const Real abk1 = pow(absb, static_cast<int>(K) + 1);
    const Real log_tail = abk1 / ((Real(1) - absb) * (Real(1) - abk1));
    const Real err = abs(product) * (exp(log_tail) - 1);
    if (err <= tol) {
      AsymptoticReport rep;
      rep.name = "C_phi";
      rep.value = product;
      rep.error_bound = err;
      rep.truncation = K;
      return rep;
    }
    if (K > 100000) throw std::invalid_argument("constant_C_phi: tolerance too tight");
    ++K;
    bk *= -absb;
    product *= (Real(1) - bk);
  }
}

AsymptoticReport constant_C0(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("constant_C0: tolerance must be positive");
  const AsymptoticReport c = constant_C(tol / 3);
  const AsymptoticReport cphi = constant_C_phi(tol / 3);
  AsymptoticReport rep;
  rep.name = "C0";
  rep.value = c.value * cphi.value;
  rep.error_bound = abs(c.value) * cphi.error_bound + abs(cphi.value) * c.error_bound +
                    c.error_bound * cphi.error_bound;
  rep.truncation = c.truncation > cphi.truncation ? c.truncation : cphi.truncation;
  return rep;
}

DetAsymptotic det_asymptotic(std::uint32_t n) {
  if (n < 3)
    throw std::invalid_argument("det_asymptotic: needs n >= 3 (the determinant vanishes at 2)");
  MatrixSpec spec;
  spec.kind = MatrixKind::Fibonacci;
  spec.n = n;
  const DetValue det = det_closed_form(spec);

  DetAsymptotic rep;
  rep.n = n;
  rep.sign = det.value.sign();
  rep.log_abs_exact = log(abs(to_real(det.value)));
  const Real phi = golden_ratio();
  const AsymptoticReport c0 = constant_C0(1e-12);
  rep.log_abs_estimate = log(abs(c0.value)) +
                         Real(std::uint64_t(n) * (std::uint64_t(n) + 1) / 2) * log(phi) -
                         Real(n) / 2 * log(Real(5));
  rep.relative_error = abs(rep.log_abs_exact - rep.log_abs_estimate) / abs(rep.log_abs_exact);
  return rep;
}

TraceRadiusReport trace_and_radius_asymptotics(std::uint32_t n, double tol) {
  if (n == 0) throw std::invalid_argument("trace_and_radius_asymptotics: n must be positive");
  if (!(tol > 0)) throw std::invalid_argument("trace_and_radius_asymptotics: bad tolerance");
  const FibCache fc = fib_cache(n + 2);
  const Real phi = golden_ratio();
  const Real sqrt5 = sqrt(Real(5));

  TraceRadiusReport rep;
  rep.n = n;
  rep.trace_exact = fc.fib[n + 2] - 1;
  rep.trace_ratio = to_real(rep.trace_exact) / (pow(phi, static_cast<int>(n) + 2) / sqrt5);

  // Largest eigenvalue from the top bracket alone.
  const std::vector<Bracket> brs = brackets(n);
  const Bracket top = brs.back();
  if (top.exact) {
    rep.lambda_max = to_real(top.lo);
  } else {
    MatrixSpec spec;
    spec.kind = MatrixKind::Fibonacci;
    spec.n = n;
    const IntPoly ip = to_integer(charpoly(spec).poly);
    const RootInterval fine = refine_root(ip, RootInterval{top.lo, top.hi, false}, Rational(tol));
    rep.lambda_max = fine.exact ? to_real(fine.lo) : to_real((fine.lo + fine.hi) / 2);
  }
  rep.radius_ratio = rep.lambda_max / (pow(phi, static_cast<int>(n)) / sqrt5);
  return rep;
}

namespace {

std::vector<std::uint64_t> effective_checkpoints(std::uint64_t n_max,
                                                 const std::vector<std::uint64_t>& checkpoints) {
  std::vector<std::uint64_t> pts;
  if (checkpoints.empty()) {
    for (std::uint64_t d = 10; d < n_max; d *= 10) pts.push_back(d);
    pts.push_back(n_max);
    return pts;
  }
  for (std::uint64_t c : checkpoints)
    if (c >= 1 && c <= n_max) pts.push_back(c);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("partial sums: no usable checkpoints");
  return pts;
}

}  // namespace

std::vector<SeriesSample> zeta_inverse_partial_sums(double p, std::uint64_t n_max,
                                                    const std::vector<std::uint64_t>& checkpoints) {
  if (!(p > 1.0)) throw std::invalid_argument("zeta_inverse_partial_sums: requires p > 1");
  if (n_max == 0 || n_max > 100'000'000ull)
    throw std::invalid_argument("zeta_inverse_partial_sums: n_max out of range");
  const std::vector<std::uint64_t> pts = effective_checkpoints(n_max, checkpoints);
  const MobiusTable mob = mobius_sieve(static_cast<std::uint32_t>(n_max));
  const double reference = to_double(Real(1) / zeta(p, 1e-13));

  std::vector<SeriesSample> out;
  out.reserve(pts.size());
  double sum = 0.0;
  std::uint64_t k = 1;
  for (std::uint64_t stop : pts) {
    for (; k <= stop; ++k)
      if (mob.mu[k] != 0) sum += mob.mu[k] / std::pow(static_cast<double>(k), p);
    out.push_back({stop, sum, reference});
  }
  return out;
}

std::vector<SeriesSample> example2_partial_sums(std::uint64_t n_max,
                                                const std::vector<std::uint64_t>& checkpoints) {
  if (n_max == 0 || n_max > 100'000'000ull)
    throw std::invalid_argument("example2_partial_sums: n_max out of range");
  const std::vector<std::uint64_t> pts = effective_checkpoints(n_max, checkpoints);
  const MobiusTable mob = mobius_sieve(static_cast<std::uint32_t>(n_max));
  const double reference = to_double(Real(-2) * euler_gamma());

  std::vector<SeriesSample> out;
  out.reserve(pts.size());
  double sum = 0.0;
  std::uint64_t k = 1;
  for (std::uint64_t stop : pts) {
    for (; k <= stop; ++k) {
      if (mob.mu[k] == 0) continue;
      const double lk = std::log(static_cast<double>(k));
      sum += mob.mu[k] * lk * lk / static_cast<double>(k);
    }
    out.push_back({stop, sum, reference});
  }
  return out;
}

LogRatioReport det_generalized_asymptotic_check(std::uint32_t p, std::uint32_t n) {
  if (p < 2) throw std::invalid_argument("det_generalized_asymptotic_check: requires p >= 2");
  if (n < 2) throw std::invalid_argument("det_generalized_asymptotic_check: requires n >= 2");

  // Exact determinant for weights a_j = j^p: (n!)^p (1 + sum_{k>=2} mu(k)/k^p).
  const MobiusTable mob = mobius_sieve(n);
  Rational series = 1;
  for (std::uint32_t k = 2; k <= n; ++k) {
    if (mob.mu[k] == 0) continue;
    BigInt kp = 1;
    for (std::uint32_t e = 0; e < p; ++e) kp *= k;
    series += Rational(BigInt(mob.mu[k]), kp);
  }
  BigInt factorial = 1;
  for (std::uint32_t k = 2; k <= n; ++k) factorial *= k;

  LogRatioReport rep;
  rep.n = n;
  rep.p = p;
  rep.sign_exact = series.sign();
  rep.log_abs_exact = Real(p) * log(to_real(factorial)) + log(abs(to_real(series)));
  rep.log_abs_estimate =
      Real(p) * log(to_real(factorial)) - log(zeta(static_cast<double>(p), 1e-13));
  rep.relative_error = abs(rep.log_abs_exact - rep.log_abs_estimate) / abs(rep.log_abs_exact);
  return rep;
}

}  // namespace redfib
