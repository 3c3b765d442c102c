#ifndef REDFIB_SPECTRAL_HPP
#define REDFIB_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "redfib/determinant.hpp"
#include "redfib/matrix.hpp"
#include "redfib/polynomial.hpp"

namespace redfib {

// Certified enclosure of one eigenvalue. `exact` means lo == hi is the
// eigenvalue itself; otherwise the characteristic polynomial provably changes
// sign across the open interval.
struct Bracket {
  Rational lo, hi;
  bool exact = false;
};

struct EigenPair {
  std::uint32_t index = 0;  // 1-based position in the sorted spectrum
  Real value;
  Real value_imag;           // nonzero only when is_complex
  bool is_complex = false;
  bool certified = false;    // backed by an exact-sign bracket (or exact root)
  Bracket bracket;           // meaningful when certified
  int multiplicity = 1;
  std::vector<Real> right;   // right eigenvector, empty when not computed
  std::vector<Real> left;    // left eigenvector, empty when not computed
  Real residual;             // scaled first-row residual of the right vector
};

// Secular-function sample: q(z) = (corner - z) + w_1 * sum_{k>=2} x_k(z),
// where x is the divisor back-substitution at z with x_1 = 1.
struct QSample {
  Real z;
  Real q;
  std::vector<Real> x;  // the substitution vector behind the sample
};

// Isolating brackets for the Fibonacci-weight spectrum, ascending. Endpoint
// signs are verified exactly; interior endpoints come from the interlacing
// pattern (1, then consecutive Fibonacci numbers), outer endpoints from a
// verified widening search.
std::vector<Bracket> brackets(std::uint32_t n);

// Full spectrum with certified brackets refined to width <= tol. Supported
// for the Fibonacci kind (theorem-backed brackets) and, through the generic
// isolation path, the variant and generalized kinds. The classic kind is
// refused: its spectrum is outside this library's contracts.
std::vector<EigenPair> eigenvalues(const MatrixSpec& spec, double tol = 1e-10);

// Spectrum of an exact generalized/variant matrix by square-free reduction,
// rational-root extraction, and Sturm isolation. Non-real eigenvalues are
// reported in conjugate pairs with numeric values only (never certified).
std::vector<EigenPair> eigen_generalized(const MatrixSpec& spec, double tol = 1e-10);

// Divisor-structure back-substitution for a right eigenvector at lambda,
// normalized x_1 = 1. Throws domain_error when lambda collides with a weight
// (use the exact-kernel path for such eigenvalues).
std::vector<Real> eigenvector(const MatrixSpec& spec, const Real& lambda);

// Forward divisor recursion for a left eigenvector at lambda, y_1 = 1.
std::vector<Real> left_eigenvector(const MatrixSpec& spec, const Real& lambda);

// Exact kernel basis of (A - lambda I) / its transpose at an exact rational
// eigenvalue; empty result means lambda is not an eigenvalue.
std::vector<std::vector<Rational>> eigenvector_exact(const MatrixSpec& spec, const Rational& lambda);
std::vector<std::vector<Rational>> left_eigenvector_exact(const MatrixSpec& spec,
                                                          const Rational& lambda);

QSample q_eval(const MatrixSpec& spec, const Real& z);
// Exact rational sample; throws domain_error at poles (z equal to a weight).
Rational q_eval_exact(const MatrixSpec& spec, const Rational& z);

// Row disks: center = diagonal entry, radius = exact sum of off-diagonal
// absolute values of the row.
struct Disk {
  std::uint32_t row = 0;
  Rational center;
  Rational radius;
};

std::vector<Disk> gershgorin(const DivisorMatrix& matrix);

// Numeric sweep over Fibonacci-kind spectra recording how the observed
// eigenvalues sit against the unproven expectations: lambda_1 in (-1, 0) and
// lambda_i < F_i + 1 for every interior index. Report only - nothing here is
// treated as a theorem by the library.
struct ScanRow {
  std::uint32_t n = 0;
  Real lambda1;
  bool lambda1_in_unit = false;  // -1 < lambda_1 < 0
  bool upper_shift_ok = false;   // lambda_i < F_i + 1 for 2 <= i <= n-1
};

std::vector<ScanRow> conjecture_scan(std::uint32_t n_max, double tol = 1e-10);

}  // namespace redfib

#endif
