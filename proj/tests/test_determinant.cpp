#include "doctest.h"
#include "oracles.hpp"
#include "redfib/determinant.hpp"
#include "redfib/matrix.hpp"

using namespace redfib;

namespace {

MatrixSpec classic(std::uint32_t n) {
  MatrixSpec s;
  s.kind = MatrixKind::Classic;
  s.n = n;
  return s;
}

MatrixSpec fibonacci(std::uint32_t n) {
  MatrixSpec s;
  s.kind = MatrixKind::Fibonacci;
  s.n = n;
  return s;
}

MatrixSpec variant(std::uint32_t n, Rational b) {
  MatrixSpec s;
  s.kind = MatrixKind::FibonacciVariant;
  s.n = n;
  s.corner_offset_b = std::move(b);
  return s;
}

MatrixSpec generalized(std::uint32_t n, std::vector<Rational> seq,
                       std::uint32_t offset = 0, bool approx = false) {
  MatrixSpec s;
  s.kind = MatrixKind::Generalized;
  s.n = n;
  s.row_offset = offset;
  s.sequence.values = std::move(seq);
  s.sequence.approximate = approx;
  return s;
}

// The six-term reference sequences used across the suite.
std::vector<Rational> alpha6() { return {2, 3, 4, 5, 6, 7}; }
std::vector<Rational> beta6() {
  return {Rational(1, 2), 1, 3, 4, 5, 6};
}

}  // namespace

TEST_CASE("closed form reproduces hand values") {
  CHECK(det_closed_form(fibonacci(1)).value == 1);
  CHECK(det_closed_form(fibonacci(2)).value == 0);
  CHECK(det_closed_form(fibonacci(3)).value == -1);
  CHECK(det_closed_form(fibonacci(4)).value == -3);

  CHECK(det_closed_form(classic(1)).value == 1);
  CHECK(det_closed_form(classic(8)).value == -2);  // matches the Mertens value

  // The corner offset adds b * (product of weights).
  CHECK(det_closed_form(variant(3, Rational(1, 2))).value == 0);
  CHECK(det_closed_form(variant(4, 1)).value == det_closed_form(fibonacci(4)).value + 6);

  CHECK(det_closed_form(generalized(6, beta6())).value == -66);
  CHECK(det_closed_form(generalized(6, alpha6())).value == 1980);
}

TEST_CASE("closed form agrees with the Mertens function for the classic kind") {
  const MobiusTable table = mobius_sieve(64);
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const DetValue d = det_closed_form(classic(n));
    CHECK(d.exact);
    CHECK(d.value == Rational(table.mertens_at(n)));
    CHECK(det_elimination(classic(n)) == d.value);
  }
}

TEST_CASE("dense elimination matches independent oracles") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const auto vals = oracle::random_positive_sequence(25, seed);
    DenseRat m(5, 5);
    std::size_t k = 0;
    for (std::uint32_t i = 1; i <= 5; ++i)
      for (std::uint32_t j = 1; j <= 5; ++j) {
        // Mix signs and zeros in deterministically.
        Rational v = vals[k++];
        if ((i + j) % 3 == 0) v = -v;
        if ((i * j) % 7 == 0) v = 0;
        m.at(i, j) = v;
      }
    const Rational bareiss = det_elimination(m);
    CHECK(bareiss == oracle::det_cofactor(m));
    CHECK(bareiss == oracle::det_gauss(m));
  }

  // Singular matrix: duplicate rows.
  DenseRat s(3, 3);
  for (std::uint32_t j = 1; j <= 3; ++j) {
    s.at(1, j) = Rational(j);
    s.at(2, j) = Rational(j);
    s.at(3, j) = Rational(j + 5);
  }
  CHECK(det_elimination(s) == 0);
}

TEST_CASE("three determinant routes agree on every kind") {
  std::vector<MatrixSpec> specs;
  for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u, 12u}) {
    specs.push_back(classic(n));
    specs.push_back(fibonacci(n));
    specs.push_back(variant(n, Rational(3, 7)));
  }
  specs.push_back(generalized(6, alpha6()));
  specs.push_back(generalized(6, beta6()));
  for (std::uint64_t seed : {9ull, 10ull}) {
    specs.push_back(generalized(10, oracle::random_positive_sequence(10, seed)));
    specs.push_back(generalized(8, oracle::random_positive_sequence(10, seed), 2));
  }

  for (const auto& spec : specs) {
    CAPTURE(kind_name(spec.kind));
    CAPTURE(spec.n);
    const Rational closed = det_closed_form(spec).value;
    CHECK(det_elimination(spec) == closed);
    CHECK(det_elimination(build(spec).to_dense()) == closed);
  }
}

TEST_CASE("eight by eight fixtures stay pinned to literal matrices") {
  CHECK(det_elimination(oracle::reference_r8()) == det_closed_form(classic(8)).value);
  CHECK(det_elimination(oracle::reference_f8()) == det_closed_form(fibonacci(8)).value);
}

TEST_CASE("structure-aware elimination scales and keeps the sign law") {
  // Product of weights is positive, and the Moebius factor stays negative
  // from n = 3 onward, so the determinant is strictly negative there.
  for (std::uint32_t n = 3; n <= 120; ++n) {
    const Rational d = det_elimination(fibonacci(n));
    CHECK(d < 0);
    if (n <= 40) CHECK(d == det_closed_form(fibonacci(n)).value);
  }
  CHECK(det_elimination(fibonacci(1)) == 1);
  CHECK(det_elimination(fibonacci(2)) == 0);
}

TEST_CASE("triangular part has the fibonorial determinant") {
  const auto dm = build(fibonacci(6));
  const auto dec = decompose(dm, DecompKind::CPlusD);
  CHECK(det_elimination(dec.second.to_dense()) == 240);  // 1*1*2*3*5*8
  const FibCache fc = fib_cache(8);
  CHECK(fc.fibonorial_at(6) == 240);
}

TEST_CASE("hessenberg recursion base cases and guards") {
  using M = std::vector<std::vector<Rational>>;
  CHECK(hessenberg_det_recursion<Rational>(M{}) == 1);  // det of the 0x0 block
  CHECK(hessenberg_det_recursion<Rational>(M{{Rational(7)}}) == 7);

  const M two{{Rational(2), Rational(3)}, {Rational(5), Rational(7)}};
  CHECK(hessenberg_det_recursion<Rational>(two) == 2 * 7 - 3 * 5);

  // Entry below the first subdiagonal must be zero.
  M bad{{Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1)}};
  CHECK_THROWS_AS(hessenberg_det_recursion<Rational>(bad), std::invalid_argument);
  bad[2][0] = 0;
  CHECK_NOTHROW(hessenberg_det_recursion<Rational>(bad));

  // Non-square input is rejected.
  M rect{{Rational(1), Rational(2)}};
  CHECK_THROWS_AS(hessenberg_det_recursion<Rational>(rect), std::invalid_argument);
}

TEST_CASE("hessenberg panel drives the characteristic polynomial") {
  for (std::uint32_t n : {3u, 5u, 6u}) {
    const MatrixSpec spec = fibonacci(n);
    const auto family = charpoly_family(spec);
    REQUIRE(family.size() == n);

    const auto panel = hessenberg_panel(spec);
    REQUIRE(panel.size() == n - 1);
    const Poly panel_det = hessenberg_det_recursion<Poly>(panel);

    // chi_n = (-1)^n det(panel) + (z - w_n) chi_{n-1}
    const DivisorMatrix dm = build(spec);
    Poly expected = Poly::linear(-dm.weight(n), 1) * family[n - 2];
    Poly signed_panel = panel_det;
    if (n % 2 == 1) signed_panel *= Rational(-1);
    expected += signed_panel;
    CHECK(expected == family[n - 1]);

    // Numeric spot check of the panel at z = 0 against plain elimination.
    DenseRat at0(n - 1, n - 1);
    for (std::uint32_t i = 1; i <= n - 1; ++i)
      for (std::uint32_t j = 1; j <= n - 1; ++j) at0.at(i, j) = panel[i - 1][j - 1](Rational(0));
    CHECK(hessenberg_det_recursion<Rational>(
              [&] {
                std::vector<std::vector<Rational>> m(n - 1, std::vector<Rational>(n - 1));
                for (std::uint32_t i = 0; i < n - 1; ++i)
                  for (std::uint32_t j = 0; j < n - 1; ++j) m[i][j] = at0.at(i + 1, j + 1);
                return m;
              }()) == det_elimination(at0));
  }
}

TEST_CASE("characteristic polynomials carry the golden coefficients") {
  const CharPoly c4 = charpoly(fibonacci(4));
  CHECK(c4.coefficients_descending() ==
        std::vector<Rational>{1, -7, 14, -6, -3});

  const CharPoly c5 = charpoly(fibonacci(5));
  CHECK(c5.coefficients_descending() ==
        std::vector<Rational>{1, -12, 48, -70, 16, 21});

  const CharPoly c1 = charpoly(fibonacci(1));
  CHECK(c1.coefficients_descending() == std::vector<Rational>{1, -1});
}

TEST_CASE("characteristic polynomial invariants") {
  const FibCache fc = fib_cache(40);
  for (std::uint32_t n : {2u, 3u, 7u, 13u, 20u}) {
    const MatrixSpec spec = fibonacci(n);
    const CharPoly c = charpoly(spec);
    REQUIRE(c.poly.degree() == int(n));
    const auto desc = c.coefficients_descending();
    CHECK(desc.front() == 1);  // monic
    // Second coefficient is minus the trace = -(F_{n+2} - 1).
    CHECK(desc[1] == -(Rational(fc.at(n + 2)) - 1));
    // Constant term is (-1)^n det.
    const Rational det = det_closed_form(spec).value;
    CHECK(desc.back() == (n % 2 == 0 ? det : -det));
  }

  // Same invariants for a generalized spec with an offset window.
  const MatrixSpec g = generalized(8, oracle::random_positive_sequence(10, 21), 2);
  const CharPoly cg = charpoly(g);
  const DivisorMatrix dm = build(g);
  Rational trace = dm.corner();
  for (std::uint32_t i = 2; i <= 8; ++i) trace += dm.weight(i);
  CHECK(cg.coefficients_descending()[1] == -trace);
  CHECK(cg.poly(Rational(0)) == det_closed_form(g).value);  // n even
}

TEST_CASE("characteristic polynomial family is internally consistent") {
  const auto family = charpoly_family(fibonacci(9));
  REQUIRE(family.size() == 9);
  for (std::uint32_t k = 1; k <= 9; ++k) {
    CHECK(family[k - 1].degree() == int(k));
    // Each member matches the stand-alone computation on the smaller size.
    CHECK(family[k - 1] == charpoly(fibonacci(k)).poly);
  }
}

TEST_CASE("characteristic polynomial guards") {
  CHECK_THROWS_AS(charpoly(fibonacci(kCharPolyCap + 1)), std::invalid_argument);
  auto approx = generalized(4, {Rational(1), Rational(2), Rational(3), Rational(4)}, 0, true);
  CHECK_THROWS_AS(charpoly(approx), unsupported_exact);
  CHECK_THROWS_AS(det_elimination(approx), unsupported_exact);
  const DetValue d = det_closed_form(approx);  // closed form degrades gracefully
  CHECK_FALSE(d.exact);
  CHECK(abs(d.value_real - Real(4)) < Real("1e-30"));  // 24 * (1 - 1/2 - 1/3)
}

TEST_CASE("singular corner offset") {
  const SingularB b1 = singular_b(1);
  CHECK(b1.b == -1);
  CHECK(b1.boundary);

  const SingularB b3 = singular_b(3);
  CHECK(b3.b == Rational(1, 2));
  CHECK_FALSE(b3.boundary);

  for (std::uint32_t n : {2u, 3u, 6u, 10u, 17u}) {
    const SingularB sb = singular_b(n);
    CHECK_FALSE(sb.boundary);
    CHECK(det_elimination(variant(n, sb.b)) == 0);
    // Nudging the offset off the singular value restores invertibility.
    CHECK(det_elimination(variant(n, sb.b + Rational(1, 1000))) != 0);
  }
}
