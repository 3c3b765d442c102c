#ifndef REDFIB_DETERMINANT_HPP
#define REDFIB_DETERMINANT_HPP

#include <cstdint>
#include <vector>

#include "redfib/matrix.hpp"
#include "redfib/polynomial.hpp"

namespace redfib {

// Determinant through the Moebius-sum closed form. Exact for exact kinds;
// approximate sequences are evaluated in high-precision floating point and
// flagged `exact = false`.
struct DetValue {
  bool exact = true;
  Rational value;   // meaningful when exact
  Real value_real;  // always filled
};

DetValue det_closed_form(const MatrixSpec& spec);

// Fraction-free (Bareiss) elimination on an explicit dense matrix.
Rational det_elimination(const DenseRat& m);

// Structure-aware exact elimination on the divisor pattern: a symmetric
// permutation turns the matrix into a triangle plus one dense row, which is
// eliminated with one pass of O(n log n) rational updates.
Rational det_elimination(const MatrixSpec& spec);

// Determinant of a dense upper Hessenberg matrix via the standard expansion
//   det H_m = sum_r (-1)^(m-r) h_{r,m} (prod_{j=r}^{m-1} h_{j+1,j}) det H_{r-1}
// with det H_0 = 1. T must be Rational or Poly; entries below the first
// subdiagonal are required to be zero.
template <class T>
T hessenberg_det_recursion(const std::vector<std::vector<T>>& h);

// The (n-1) x (n-1) upper Hessenberg polynomial matrix whose determinant
// drives the characteristic-polynomial recursion: it is the minor of
// (z I - A) that drops column 1 and row n.
std::vector<std::vector<Poly>> hessenberg_panel(const MatrixSpec& spec);

// Characteristic polynomial chi (monic, of z) with exact coefficients.
struct CharPoly {
  std::uint32_t n = 0;
  Poly poly;

  std::vector<Rational> coefficients_descending() const;
};

inline constexpr std::uint32_t kCharPolyCap = 256;

// Exact kinds only. Sizes above `cap` are refused (coefficient growth).
CharPoly charpoly(const MatrixSpec& spec, std::uint32_t cap = kCharPolyCap);

// The full family chi_1 .. chi_n in one pass (family[k-1] = chi_k).
std::vector<Poly> charpoly_family(const MatrixSpec& spec, std::uint32_t cap = kCharPolyCap);

// The corner offset that makes the variant matrix singular:
//   b = -(sum over k <= n of mu(k)/F_k).
// `boundary` flags b <= -1, where the variant spec itself rejects b; the
// value is still reported. (For n >= 2 the sum lies strictly inside (-1, 1),
// so the flag stays false there; n = 1 gives b = -1.)
struct SingularB {
  Rational b;
  bool boundary = false;
};

SingularB singular_b(std::uint32_t n);

}  // namespace redfib

#endif
