#ifndef REDFIB_POLYNOMIAL_HPP
#define REDFIB_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "redfib/scalar.hpp"

namespace redfib {

// Dense univariate polynomial over the rationals, coefficients ascending
// (coeff[k] multiplies z^k). The zero polynomial has an empty vector; all
// operations keep the leading coefficient nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(std::vector<Rational> ascending);

  static Poly linear(const Rational& a0, const Rational& a1);  // a0 + a1 z

  bool is_zero() const { return m_c.empty(); }
  int degree() const { return static_cast<int>(m_c.size()) - 1; }  // -1 for zero
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return m_c; }
  Rational coeff(std::size_t k) const { return k < m_c.size() ? m_c[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  Real eval_real(const Real& x) const;
  double eval_double(double x) const;

  Poly derivative() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly& operator*=(const Rational& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.m_c == b.m_c; }

  // Quotient and remainder of exact rational division.
  static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);

 private:
  void trim();
  std::vector<Rational> m_c;
};

// Integer image of a rational polynomial: coefficients scaled by the positive
// lcm of the denominators. Shares all real roots (and their signs) with the
// source, which is what the exact sign tests need.
struct IntPoly {
  std::vector<BigInt> c;  // ascending, leading nonzero (empty = zero poly)

  int degree() const { return static_cast<int>(c.size()) - 1; }
};

IntPoly to_integer(const Poly& p);

// Exact sign of p at the rational point x, via sum of c_k num^k den^(deg-k).
int sign_at(const IntPoly& p, const Rational& x);

// Exact value of p at num/den, scaled by den^deg (integer Horner).
BigInt eval_scaled(const IntPoly& p, const BigInt& num, const BigInt& den);

// Square-free part p / gcd(p, p') and the multiplicity-annotated factors of
// the Yun decomposition: p = prod factor[k].first ^ factor[k].second.
Poly squarefree_part(const Poly& p);
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Sturm chain of a (preferably square-free) polynomial; root counting over
// half-open intervals (a, b] by sign-variation difference.
std::vector<Poly> sturm_chain(const Poly& p);
int sign_variations_at(const std::vector<Poly>& chain, const Rational& x);
int count_roots_half_open(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

// All rational roots of p (each with multiplicity 1 in the output even if
// repeated in p), found by the rational root theorem. The search enumerates
// divisors of the outer coefficients and is refused when they have more than
// `divisor_cap` divisors to enumerate.
std::vector<Rational> rational_roots(const Poly& p, std::uint64_t divisor_cap = 100000);

// Cauchy root bound: every real root lies in (-B, B).
Rational cauchy_bound(const Poly& p);

struct RootInterval {
  Rational lo, hi;   // open interval containing exactly one root, unless exact
  bool exact = false;  // root == lo == hi
};

// Isolating intervals for all distinct real roots of p, ascending. Works on
// the square-free part internally, so multiplicities collapse.
std::vector<RootInterval> isolate_real_roots(const Poly& p);

// Shrinks an isolating interval until hi - lo <= width, by exact-sign
// bisection. A midpoint that is an exact root collapses the interval.
RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rational& width);

// Durand-Kerner iteration in double complex arithmetic; used only for the
// numeric values of non-real roots (flagged, never certified).
std::vector<std::pair<double, double>> all_roots_numeric(const Poly& p);

}  // namespace redfib

#endif
