#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "redfib/spectral.hpp"

using namespace redfib;

namespace {

MatrixSpec fibonacci(std::uint32_t n) {
  MatrixSpec s;
  s.kind = MatrixKind::Fibonacci;
  s.n = n;
  return s;
}

MatrixSpec generalized(std::uint32_t n, std::vector<Rational> seq) {
  MatrixSpec s;
  s.kind = MatrixKind::Generalized;
  s.n = n;
  s.sequence.values = std::move(seq);
  return s;
}

double dval(const EigenPair& p) { return to_double(p.value); }

}  // namespace

TEST_CASE("brackets: small sizes collapse to exact rational roots") {
  const auto b1 = brackets(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].exact);
  CHECK(b1[0].lo == 1);

  const auto b2 = brackets(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].exact);
  CHECK(b2[0].lo == 0);
  CHECK(b2[1].exact);
  CHECK(b2[1].lo == 2);
}

TEST_CASE("brackets: certified, disjoint, and interlaced") {
  const FibCache fc = fib_cache(40);
  for (std::uint32_t n : {3u, 5u, 8u, 13u, 21u, 34u}) {
    const auto bs = brackets(n);
    REQUIRE(bs.size() == n);
    const IntPoly ip = to_integer(charpoly(fibonacci(n)).poly);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Bracket& b = bs[i];
      if (b.exact) {
        CHECK(sign_at(ip, b.lo) == 0);
        continue;
      }
      // Re-verify the sign change independently of the producer.
      CHECK(b.lo < b.hi);
      CHECK(sign_at(ip, b.lo) * sign_at(ip, b.hi) == -1);
      if (i > 0) CHECK(bs[i - 1].hi <= b.lo);
    }
    // Interlacing shape: one negative eigenvalue, then Fibonacci steps.
    CHECK(bs[0].hi <= 1);
    CHECK(bs[0].lo < 0);
    for (std::uint32_t i = 2; i + 1 <= n; ++i) {
      CHECK(bs[i - 1].lo == Rational(fc.at(i)));
      CHECK(bs[i - 1].hi == Rational(fc.at(i + 1)));
    }
    CHECK(bs[n - 1].lo == Rational(fc.at(n)));
  }
}

TEST_CASE("five by five spectrum matches the reference decimals") {
  const auto eigs = eigenvalues(fibonacci(5), 1e-10);
  REQUIRE(eigs.size() == 5);
  const double expected[] = {-0.400, 1.197, 2.294, 3.600, 5.309};
  for (int i = 0; i < 5; ++i) {
    CHECK(eigs[i].certified);
    CHECK_FALSE(eigs[i].is_complex);
    CHECK(std::abs(dval(eigs[i]) - expected[i]) < 2e-3);
  }
  // Product of eigenvalues equals the determinant.
  Real prod = 1;
  for (const auto& e : eigs) prod *= e.value;
  CHECK(abs(prod - to_real(det_closed_form(fibonacci(5)).value)) < Real("1e-8"));
}

TEST_CASE("certified brackets are honoured by the refined values") {
  for (std::uint32_t n : {4u, 9u, 16u}) {
    const auto eigs = eigenvalues(fibonacci(n), 1e-10);
    REQUIRE(eigs.size() == n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto& e = eigs[i];
      CHECK(e.index == i + 1);
      CHECK(e.certified);
      if (e.bracket.exact) {
        CHECK(to_real(e.bracket.lo) == e.value);
      } else {
        CHECK(e.bracket.hi - e.bracket.lo <= Rational(1) / 10000000000ll);
        CHECK(to_real(e.bracket.lo) < e.value);
        CHECK(e.value < to_real(e.bracket.hi));
      }
      if (i > 0) CHECK(dval(eigs[i - 1]) < dval(e));
    }
  }
}

TEST_CASE("eigenvector recursions: structure and residuals") {
  const std::uint32_t n = 8;
  const auto eigs = eigenvalues(fibonacci(n), 1e-12);
  const FibCache fc = fib_cache(n + 2);
  for (const auto& e : eigs) {
    REQUIRE(e.right.size() == n);
    REQUIRE(e.left.size() == n);
    CHECK(e.right[0] == 1);
    CHECK(e.left[0] == 1);
    CHECK(e.residual < Real("1e-9"));

    // Indices with no multiples <= n have the pole form x_k = 1/(lambda - F_k).
    for (std::uint32_t k = n / 2 + 1; k <= n; ++k) {
      const Real pole = 1 / (e.value - to_real(fc.at(k)));
      CHECK(abs(e.right[k - 1] - pole) < Real("1e-8") * (1 + abs(pole)));
    }

    // Column-1 balance for the left vector: sum_i y_i = lambda * y_1.
    Real sum = 0;
    for (const Real& y : e.left) sum += y;
    CHECK(abs(sum - e.value) < Real("1e-8") * (1 + abs(e.value)));
  }
}

TEST_CASE("direct eigenvector call rejects weight collisions") {
  // lambda equal to a weight makes the back-substitution denominator vanish.
  CHECK_THROWS_AS(eigenvector(fibonacci(6), Real(2)), std::domain_error);
  CHECK_THROWS_AS(left_eigenvector(fibonacci(6), Real(5)), std::domain_error);
  CHECK_NOTHROW(eigenvector(fibonacci(6), Real("2.5")));
}

TEST_CASE("secular function: hand value and exact identity") {
  // n = 3 at z = 0: x_2 = -1, x_3 = -1/2, so q = 1 + (-3/2) = -1/2.
  CHECK(q_eval_exact(fibonacci(3), Rational(0)) == Rational(-1, 2));
  const QSample s = q_eval(fibonacci(3), Real(0));
  CHECK(abs(s.q - Real(Rational(-1, 2))) < Real("1e-40"));
  REQUIRE(s.x.size() == 3);
  CHECK(s.x[0] == 1);

  // chi(z) = -q(z) * prod_{k>=2} (z - w_k) away from the poles.
  const std::uint32_t n = 5;
  const Poly chi = charpoly(fibonacci(n)).poly;
  const FibCache fc = fib_cache(n + 1);
  for (const Rational& z : {Rational(0), Rational(7, 2), Rational(-3), Rational(22, 7)}) {
    Rational prod = 1;
    for (std::uint32_t k = 2; k <= n; ++k) prod *= z - Rational(fc.at(k));
    CHECK(chi(z) == -q_eval_exact(fibonacci(n), z) * prod);
  }

  // Poles are reported, not silently evaluated.
  CHECK_THROWS_AS(q_eval_exact(fibonacci(5), Rational(3)), std::domain_error);
}

TEST_CASE("gershgorin disks cover the numeric spectrum") {
  const std::uint32_t n = 6;
  const auto dm = build(fibonacci(n));
  const auto disks = gershgorin(dm);
  REQUIRE(disks.size() == n);
  CHECK(disks[0].center == 1);
  CHECK(disks[0].radius == n - 1);
  CHECK(disks[1].center == 1);
  CHECK(disks[1].radius == 3);  // column 1 entry + two off-diagonal multiples
  CHECK(disks[5].center == 8);
  CHECK(disks[5].radius == 1);

  for (const auto& e : eigenvalues(fibonacci(n), 1e-10)) {
    bool covered = false;
    for (const auto& d : disks)
      if (abs(e.value - to_real(d.center)) <= to_real(d.radius) + Real("1e-30")) covered = true;
    CHECK(covered);
  }
}

TEST_CASE("generalized spectra: six-term reference sequences") {
  const auto alpha = eigen_generalized(generalized(6, {2, 3, 4, 5, 6, 7}), 1e-10);
  REQUIRE(alpha.size() == 6);
  const double a_expected[] = {0.773, 2.312, 3.946, 5.410, 6.220, 8.338};
  for (int i = 0; i < 6; ++i) {
    CHECK_FALSE(alpha[i].is_complex);
    CHECK(std::abs(dval(alpha[i]) - a_expected[i]) < 2e-3);
  }

  const auto beta = eigen_generalized(
      generalized(6, {Rational(1, 2), 1, 3, 4, 5, 6}), 1e-10);
  REQUIRE(beta.size() == 6);
  const double b_expected[] = {-0.142, 1.183, 3.0, 4.141, 5.097, 6.221};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(dval(beta[i]) - b_expected[i]) < 2e-3);

  // lambda = 3 collides with a weight and is an exact rational eigenvalue.
  const EigenPair& three = beta[2];
  CHECK(three.certified);
  CHECK(three.bracket.exact);
  CHECK(three.bracket.lo == 3);
  CHECK(three.multiplicity == 1);
}

TEST_CASE("exact kernel solves handle weight collisions") {
  const MatrixSpec spec = generalized(6, {Rational(1, 2), 1, 3, 4, 5, 6});

  const auto right = eigenvector_exact(spec, Rational(3));
  REQUIRE(right.size() == 1);
  {
    // Verify A v = 3 v exactly, entrywise.
    const DenseRat a = build(spec).to_dense();
    const auto& v = right[0];
    for (std::uint32_t i = 1; i <= 6; ++i) {
      Rational acc = 0;
      for (std::uint32_t j = 1; j <= 6; ++j) acc += a.at(i, j) * v[j - 1];
      CHECK(acc == 3 * v[i - 1]);
    }
    // Proportional to (1, -1/6, 7, -1, -1/2, -1/3): fix the scale by v_1.
    REQUIRE(v[0] != 0);
    const Rational s = 1 / v[0];
    CHECK(v[1] * s == Rational(-1, 6));
    CHECK(v[2] * s == 7);
    CHECK(v[3] * s == -1);
    CHECK(v[4] * s == Rational(-1, 2));
    CHECK(v[5] * s == Rational(-1, 3));
  }

  const auto left = left_eigenvector_exact(spec, Rational(3));
  REQUIRE(left.size() == 1);
  {
    // The left kernel is supported on rows 3 and 6 only, with opposite signs.
    const auto& y = left[0];
    CHECK(y[0] == 0);
    CHECK(y[1] == 0);
    CHECK(y[3] == 0);
    CHECK(y[4] == 0);
    REQUIRE(y[5] != 0);
    CHECK(y[2] == -y[5]);
  }

  // A non-eigenvalue has an empty kernel.
  CHECK(eigenvector_exact(spec, Rational(17)).empty());
}

TEST_CASE("complex eigenvalue pairs are reported numerically") {
  // Weights (-4, -4): chi = (z + 4)^2 + 4, roots -4 +- 2i.
  const auto eigs = eigen_generalized(generalized(2, {-4, -4}), 1e-10);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0].is_complex);
  CHECK(eigs[1].is_complex);
  CHECK_FALSE(eigs[0].certified);
  CHECK(std::abs(to_double(eigs[0].value) + 4.0) < 1e-9);
  CHECK(std::abs(std::abs(to_double(eigs[0].value_imag)) - 2.0) < 1e-9);
  CHECK(abs(eigs[0].value_imag + eigs[1].value_imag) < Real("1e-9"));
}

TEST_CASE("repeated eigenvalues carry their multiplicity") {
  // Weights (2, 2): chi = (z - 2)^2 - 2... not repeated; craft instead a
  // diagonal-dominant collision: n = 1 generalized has chi = z - a_1.
  const auto single = eigen_generalized(generalized(1, {Rational(5, 3)}), 1e-10);
  REQUIRE(single.size() == 1);
  CHECK(single[0].bracket.exact);
  CHECK(single[0].bracket.lo == Rational(5, 3));
  CHECK(single[0].multiplicity == 1);
}

TEST_CASE("classic spectra are refused") {
  MatrixSpec s;
  s.kind = MatrixKind::Classic;
  s.n = 5;
  CHECK_THROWS_AS(eigenvalues(s), std::invalid_argument);
}

TEST_CASE("variant spectra run through the generic path") {
  MatrixSpec s;
  s.kind = MatrixKind::FibonacciVariant;
  s.n = 4;
  s.corner_offset_b = Rational(1, 2);
  const auto eigs = eigenvalues(s, 1e-10);
  REQUIRE(eigs.size() == 4);
  Real prod = 1;
  for (const auto& e : eigs) {
    CHECK_FALSE(e.is_complex);
    prod *= e.value;
  }
  CHECK(abs(prod - to_real(det_closed_form(s).value)) < Real("1e-8"));
}

TEST_CASE("conjecture scan reports the expected pattern") {
  const auto rows = conjecture_scan(12, 1e-10);
  REQUIRE(rows.size() == 10);  // n = 3 .. 12
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CHECK(row.lambda1_in_unit);
    CHECK(row.upper_shift_ok);
    CHECK(to_double(row.lambda1) < 0.0);
    CHECK(to_double(row.lambda1) > -1.0);
  }
  CHECK_THROWS_AS(conjecture_scan(2), std::invalid_argument);
}

TEST_CASE("residuals stay small across moderate sizes") {
  for (std::uint32_t n : {6u, 12u, 20u}) {
    const auto eigs = eigenvalues(fibonacci(n), 1e-12);
    for (const auto& e : eigs) {
      if (e.right.empty()) continue;
      CHECK(e.residual < Real("1e-6"));
    }
  }
}
