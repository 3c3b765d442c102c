#include <cmath>

#include "doctest.h"
#include "redfib/asymptotics.hpp"
#include "redfib/numtheory.hpp"

using namespace redfib;

namespace {

Real abs_real(const Real& x) { return x < 0 ? Real(-x) : x; }

}  // namespace

TEST_CASE("named constants") {
  CHECK(abs(golden_ratio() * golden_ratio() - golden_ratio() - 1) < Real("1e-45"));
  CHECK(std::abs(to_double(euler_gamma()) - 0.5772156649015329) < 1e-15);
}

TEST_CASE("reciprocal-fibonacci constant with certified tail") {
  const AsymptoticReport report = constant_C(1e-10);
  CHECK(report.error_bound <= Real("1e-10"));
  CHECK(std::abs(to_double(report.value) + 0.64572472) < 1e-7);

  // Independent oracle: the same series summed exactly much further.
  const MobiusTable table = mobius_sieve(200);
  const FibCache fc = fib_cache(200);
  Rational oracle = 0;
  for (std::uint32_t k = 1; k <= 200; ++k)
    if (table.mobius(k) != 0) oracle += Rational(table.mobius(k)) / Rational(fc.at(k));
  CHECK(abs_real(report.value - to_real(oracle)) <= report.error_bound + Real("1e-40"));
}

TEST_CASE("loose tolerance selects the twelve-term truncation") {
  const AsymptoticReport report = constant_C(0.0132);
  CHECK(report.truncation == 12);
  CHECK(std::abs(to_double(report.value) + 0.6449772) < 5e-8);
  CHECK(report.error_bound < Real("0.013192"));
  CHECK(report.error_bound > Real("0.013"));

  // A slightly tighter tolerance must push the truncation further.
  CHECK(constant_C(0.013).truncation > 12);
}

TEST_CASE("fibonorial correction product") {
  const AsymptoticReport report = constant_C_phi(1e-10);
  CHECK(std::abs(to_double(report.value) - 1.226742) < 1e-5);
  CHECK(report.error_bound <= Real("1e-10"));

  // Oracle: multiply many factors directly at working precision.
  const Real phi = golden_ratio();
  const Real b = -1 / (phi * phi);
  Real prod = 1, bk = 1;
  for (int k = 1; k <= 200; ++k) {
    bk *= b;
    prod *= 1 - bk;
  }
  CHECK(abs_real(report.value - prod) <= report.error_bound + Real("1e-40"));
}

TEST_CASE("combined constant and error propagation") {
  const AsymptoticReport c0 = constant_C0(1e-9);
  CHECK(std::abs(to_double(c0.value) + 0.7921376) < 2e-6);
  CHECK(c0.error_bound <= Real("1e-9"));
  const Real direct = constant_C(1e-12).value * constant_C_phi(1e-12).value;
  CHECK(abs_real(c0.value - direct) < Real("1e-9"));
}

TEST_CASE("fibonorial growth matches the closed-form estimate") {
  const FibCache fc = fib_cache(40);
  const Real phi = golden_ratio();
  const Real log_phi = log(phi);
  const Real log_5 = log(Real(5));
  const Real log_cphi = log(constant_C_phi(1e-14).value);
  const double babs = to_double(1 / (phi * phi));
  for (std::uint32_t n : {10u, 20u, 30u}) {
    const Real lhs = log(to_real(fc.fibonorial_at(n)));
    const Real rhs = log_cphi + Real(n) * Real(n + 1) / 2 * log_phi - Real(n) / 2 * log_5;
    const double bound = 2 * std::pow(babs, n + 1) / (1 - babs);
    CHECK(to_double(abs_real(lhs - rhs)) <= bound);
  }
}

TEST_CASE("determinant asymptotic closes in on the exact value") {
  CHECK_THROWS_AS(det_asymptotic(2), std::invalid_argument);

  const DetAsymptotic d10 = det_asymptotic(10);
  CHECK(d10.sign == -1);
  CHECK(to_double(d10.relative_error) < 5e-3);

  const DetAsymptotic d40 = det_asymptotic(40);
  CHECK(d40.sign == -1);
  CHECK(to_double(d40.relative_error) < 1e-8);
  CHECK(to_double(d40.relative_error) < to_double(d10.relative_error));
  // The exact log magnitude is a few hundred at n = 40.
  CHECK(to_double(d40.log_abs_exact) > 300.0);
  CHECK(to_double(d40.log_abs_exact) < 500.0);
}

TEST_CASE("trace and spectral radius ratios") {
  const TraceRadiusReport r = trace_and_radius_asymptotics(30, 1e-10);
  CHECK(r.trace_exact == 2178308);  // F_32 - 1
  CHECK(std::abs(to_double(r.trace_ratio) - 1.0) < 1e-6);
  CHECK(std::abs(to_double(r.radius_ratio) - 1.0) < 1e-5);
  const FibCache fc = fib_cache(32);
  CHECK(r.lambda_max > to_real(fc.at(30)));
  CHECK(r.lambda_max < to_real(fc.at(30)) + 1);
}

TEST_CASE("moebius over squares approaches the zeta inverse") {
  const auto samples = zeta_inverse_partial_sums(2.0, 100000);
  REQUIRE(samples.size() == 5);  // decades 10 .. 1e5
  CHECK(samples.front().n == 10);
  CHECK(samples.back().n == 100000);
  for (const auto& s : samples) CHECK(std::abs(s.reference - 0.6079271) < 1e-6);
  CHECK(std::abs(samples.back().partial - samples.back().reference) < 1e-4);

  // Explicit checkpoints are honoured as given.
  const auto custom = zeta_inverse_partial_sums(2.0, 1000, {50, 500});
  REQUIRE(custom.size() == 2);
  CHECK(custom[0].n == 50);
  CHECK(custom[1].n == 500);

  // Oracle at a tiny cutoff: mu(1)/1 + mu(2)/4 + ... + mu(10)/100.
  const MobiusTable table = mobius_sieve(16);
  double direct = 0;
  for (std::uint32_t k = 1; k <= 10; ++k) direct += table.mobius(k) / double(k * k);
  CHECK(std::abs(samples.front().partial - direct) < 1e-12);
}

TEST_CASE("log-squared series is reported without asserting its limit") {
  const auto samples = example2_partial_sums(10000);
  REQUIRE(!samples.empty());
  CHECK(samples.back().n == 10000);
  for (const auto& s : samples)
    CHECK(std::abs(s.reference - (-2 * 0.5772156649015329)) < 1e-9);

  // Oracle for the first checkpoint.
  const MobiusTable table = mobius_sieve(16);
  double direct = 0;
  for (std::uint32_t k = 2; k <= 10; ++k) {
    const double lk = std::log(double(k));
    direct += table.mobius(k) * lk * lk / double(k);
  }
  CHECK(std::abs(samples.front().partial - direct) < 1e-12);
}

TEST_CASE("power-weight determinants track the stirling zeta estimate") {
  const LogRatioReport p2 = det_generalized_asymptotic_check(2, 100);
  CHECK(p2.sign_exact == 1);
  CHECK(to_double(p2.relative_error) < 1e-3);

  const LogRatioReport p3 = det_generalized_asymptotic_check(3, 60);
  CHECK(p3.sign_exact == 1);
  CHECK(to_double(p3.relative_error) < 1e-3);

  CHECK_THROWS_AS(det_generalized_asymptotic_check(1, 10), std::invalid_argument);
}
