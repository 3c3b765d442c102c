#ifndef REDFIB_ASYMPTOTICS_HPP
#define REDFIB_ASYMPTOTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "redfib/scalar.hpp"

namespace redfib {

inline constexpr int kDefaultReportDigits = 30;

Real golden_ratio();
Real euler_gamma();

// A truncated limit together with its certified truncation error.
struct AsymptoticReport {
  std::string name;
  Real value;
  Real error_bound;               // certified bound on |value - limit|
  std::uint64_t truncation = 0;   // terms/factors actually used
};

// C = sum_{k>=1} mu(k)/F_k, summed exactly through k0 with the geometric
// Fibonacci tail bound phi^(2-k0)/(phi-1) <= tol.
AsymptoticReport constant_C(double tol);

// C_phi = prod_{k>=1} (1 - b^k) with b = -1/phi^2.
AsymptoticReport constant_C_phi(double tol);

// C0 = C * C_phi, the constant in det F_R(n) ~ C0 phi^(n(n+1)/2) 5^(-n/2).
AsymptoticReport constant_C0(double tol);

struct DetAsymptotic {
  std::uint32_t n = 0;
  int sign = 0;            // sign of the exact determinant
  Real log_abs_exact;      // ln |det| from the exact closed form
  Real log_abs_estimate;   // ln |C0| + n(n+1)/2 ln phi - (n/2) ln 5
  Real relative_error;     // |exact - estimate| / |exact|, log scale
};

// Requires n >= 3 (the determinant vanishes at n = 2).
DetAsymptotic det_asymptotic(std::uint32_t n);

struct TraceRadiusReport {
  std::uint32_t n = 0;
  BigInt trace_exact;      // F_{n+2} - 1
  Real trace_ratio;        // trace / (phi^(n+2)/sqrt 5)
  Real lambda_max;         // largest eigenvalue, bracket-certified
  Real radius_ratio;       // lambda_max / (phi^n/sqrt 5)
};

TraceRadiusReport trace_and_radius_asymptotics(std::uint32_t n, double tol = 1e-10);

struct SeriesSample {
  std::uint64_t n = 0;
  double partial = 0.0;
  double reference = 0.0;  // the associated limit (or conjectured limit)
};

// Partial sums of sum mu(k)/k^p against 1/zeta(p). Empty checkpoint list
// means decades 10, 100, ... up to n_max (always including n_max).
std::vector<SeriesSample> zeta_inverse_partial_sums(
    double p, std::uint64_t n_max, const std::vector<std::uint64_t>& checkpoints = {});

// Partial sums of sum mu(k) ln^2(k)/k. The reference column reports the
// conjectured limit -2*gamma for orientation only; nothing in the library
// asserts convergence to it.
std::vector<SeriesSample> example2_partial_sums(
    std::uint64_t n_max, const std::vector<std::uint64_t>& checkpoints = {});

struct LogRatioReport {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  int sign_exact = 0;
  Real log_abs_exact;     // ln |det| for weights a_j = j^p, exact closed form
  Real log_abs_estimate;  // p ln(n!) - ln zeta(p)
  Real relative_error;
};

LogRatioReport det_generalized_asymptotic_check(std::uint32_t p, std::uint32_t n);

}  // namespace redfib

#endif
