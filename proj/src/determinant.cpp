#include "redfib/determinant.hpp"

#include <stdexcept>

#include "redfib/numtheory.hpp"

namespace redfib {

DetValue det_closed_form(const MatrixSpec& spec) {
  spec.validate();
  const DivisorMatrix m(spec);
  const std::uint32_t n = spec.n;
  const MobiusTable mob = mobius_sieve(n > 1 ? n : 1);

  DetValue out;
  if (m.approximate()) {
    // High-precision float evaluation of the same closed form.
    out.exact = false;
    Real prod = 1;
    for (std::uint32_t j = 1; j <= n; ++j) prod *= to_real(m.weight(j));
    Real sum = 1;
    for (std::uint32_t k = 2; k <= n; ++k) {
      const int mu = mob.mu[k];
      if (mu != 0) sum += Real(mu) / to_real(m.weight(k));
    }
    sum += (to_real(m.corner()) - to_real(m.weight(1))) / to_real(m.weight(1));
    out.value_real = prod * sum;
    return out;
  }

  Rational prod = 1;
  for (std::uint32_t j = 1; j <= n; ++j) prod *= m.weight(j);
  Rational sum = 1;
  for (std::uint32_t k = 2; k <= n; ++k) {
    const int mu = mob.mu[k];
    if (mu != 0) sum += Rational(mu) / m.weight(k);
  }
  sum += (m.corner() - m.weight(1)) / m.weight(1);  // variant corner shift; zero otherwise
  out.value = prod * sum;
  out.value_real = to_real(out.value);
  return out;
}

Rational det_elimination(const DenseRat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_elimination: matrix must be square");
  const std::uint32_t n = m.rows;
  if (n == 0) throw std::invalid_argument("det_elimination: empty matrix");

  // Clear denominators row by row, then run fraction-free Bareiss elimination
  // over the integers.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  Rational scale = 1;  // det(m) = det(a) / scale
  for (std::uint32_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
      const BigInt d = denominator(m.at(i + 1, j + 1));
      l = l / gcd(l, d) * d;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      const Rational& v = m.at(i + 1, j + 1);
      a[i][j] = numerator(v) * (l / denominator(v));
    }
    scale *= Rational(l);
  }

  BigInt prev = 1;
  int sign = 1;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::uint32_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return Rational(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::uint32_t i = k + 1; i < n; ++i) {
      for (std::uint32_t j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by the Bareiss identity
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1], 1);
  if (sign < 0) det = -det;
  return det / scale;
}

Rational det_elimination(const MatrixSpec& spec) {
  spec.validate();
  const DivisorMatrix m(spec);
  if (m.approximate())
    throw unsupported_exact("det_elimination: exact elimination needs an exact weight sequence");
  const std::uint32_t n = spec.n;
  if (n == 1) return m.corner();

  // Symmetric permutation (2, ..., n, 1) on rows and columns (signs cancel)
  // leaves an upper triangle with diagonal w_2..w_n, an all-ones last column,
  // and a dense last row (w_1, ..., w_1, corner). One elimination sweep of
  // the last row against the triangle finishes the job; each pivot row k
  // touches only the positions whose original index is a multiple of k+1.
  std::vector<Rational> last(std::size_t(n) + 1);  // last[j], 1-based new column index
  for (std::uint32_t j = 1; j < n; ++j) last[j] = m.weight(1);
  last[n] = m.corner();

  for (std::uint32_t j = 1; j < n; ++j) {
    if (last[j] == 0) continue;
    const std::uint32_t piv = j + 1;  // original index of the pivot row/column
    const Rational f = last[j] / m.weight(piv);
    for (std::uint64_t c = std::uint64_t(piv) * 2; c <= n; c += piv)
      last[static_cast<std::uint32_t>(c) - 1] -= f * m.weight(piv);
    last[n] -= f;  // the all-ones last column
    last[j] = 0;
  }

  Rational det = last[n];
  for (std::uint32_t i = 2; i <= n; ++i) det *= m.weight(i);
  return det;
}

namespace {

inline bool hd_is_zero(const Rational& v) { return v == 0; }
inline bool hd_is_zero(const Poly& p) { return p.is_zero(); }

template <class T>
T hd_one();
template <>
Rational hd_one<Rational>() {
  return Rational(1);
}
template <>
Poly hd_one<Poly>() {
  return Poly(Rational(1));
}

}  // namespace

template <class T>
T hessenberg_det_recursion(const std::vector<std::vector<T>>& h) {
  const std::size_t m = h.size();
  if (m == 0) return hd_one<T>();  // det of the 0 x 0 block, the recursion's base case
  for (const auto& row : h)
    if (row.size() != m) throw std::invalid_argument("hessenberg_det_recursion: matrix must be square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (!hd_is_zero(h[i][j]))
        throw std::invalid_argument("hessenberg_det_recursion: entry below the subdiagonal is nonzero");

  // dets[k] = det of the leading k x k block, dets[0] = 1.
  std::vector<T> dets;
  dets.reserve(m + 1);
  dets.push_back(hd_one<T>());
  for (std::size_t k = 1; k <= m; ++k) {
    T acc{};  // zero
    T subdiag = hd_one<T>();  // prod of h[j+1][j] for j = r .. k-2 (1-based r..k-1)
    for (std::size_t r = k; r >= 1; --r) {
      // term for first row index r (1-based): sign (-1)^(k-r)
      T term = h[r - 1][k - 1] * subdiag * dets[r - 1];
      if ((k - r) % 2 == 0)
        acc += term;
      else
        acc -= term;
      if (r > 1) subdiag = subdiag * h[r - 1][r - 2];
    }
    dets.push_back(std::move(acc));
  }
  return dets[m];
}

template Rational hessenberg_det_recursion<Rational>(const std::vector<std::vector<Rational>>&);
template Poly hessenberg_det_recursion<Poly>(const std::vector<std::vector<Poly>>&);

std::vector<std::vector<Poly>> hessenberg_panel(const MatrixSpec& spec) {
  spec.validate();
  const DivisorMatrix m(spec);
  if (m.approximate())
    throw unsupported_exact("hessenberg_panel: exact panel needs an exact weight sequence");
  const std::uint32_t n = spec.n;
  if (n < 2) throw std::invalid_argument("hessenberg_panel: needs n >= 2");
  std::vector<std::vector<Poly>> panel(n - 1, std::vector<Poly>(n - 1));
  for (std::uint32_t i = 0; i < n - 1; ++i) {
    const std::uint32_t r = i + 1;  // original row
    for (std::uint32_t j = 0; j < n - 1; ++j) {
      const std::uint32_t c = j + 2;  // original column
      if (r == c)
        panel[i][j] = Poly::linear(-m.weight(r), 1);  // z - w_r on the subdiagonal
      else if (c % r == 0)
        panel[i][j] = Poly(-m.weight(r));
    }
  }
  return panel;
}

std::vector<Rational> CharPoly::coefficients_descending() const {
  std::vector<Rational> out;
  out.reserve(poly.coeffs().size());
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) out.push_back(*it);
  return out;
}

std::vector<Poly> charpoly_family(const MatrixSpec& spec, std::uint32_t cap) {
  spec.validate();
  if (spec.n > cap)
    throw std::invalid_argument("charpoly_family: size " + std::to_string(spec.n) +
                                " exceeds the cap of " + std::to_string(cap));
  const DivisorMatrix m(spec);
  if (m.approximate())
    throw unsupported_exact("charpoly_family: exact coefficients need an exact weight sequence");
  const std::uint32_t n = spec.n;

  std::vector<Poly> chis(n);
  chis[0] = Poly::linear(-m.corner(), 1);  // z - corner
  if (n == 1) return chis;

  // Rolling expansion of the Hessenberg panel determinants d[m]: q[r] tracks
  // (prod of subdiagonal factors from r to the current column) * d[r-1], so
  // each new column only needs its divisor positions.
  std::vector<Poly> d(n);
  d[0] = Poly(Rational(1));
  std::vector<Poly> q(n);  // q[r] live for 1 <= r <= current m

  for (std::uint32_t m_idx = 1; m_idx < n; ++m_idx) {
    const Poly advance = Poly::linear(-m.weight(m_idx), 1);  // z - w_m
    for (std::uint32_t r = 1; r < m_idx; ++r) q[r] *= advance;
    q[m_idx] = d[m_idx - 1];

    Poly dm;
    for (std::uint64_t r : divisors(m_idx + 1)) {
      if (r > m_idx) break;  // skip the trivial divisor m+1 itself
      Poly term = q[static_cast<std::uint32_t>(r)];
      term *= m.weight(static_cast<std::uint32_t>(r));
      if ((m_idx - r) % 2 == 0)
        dm -= term;  // (-1)^(m-r) * (-w_r)
      else
        dm += term;
    }
    d[m_idx] = std::move(dm);

    Poly next = Poly::linear(-m.weight(m_idx + 1), 1) * chis[m_idx - 1];
    if ((m_idx + 1) % 2 == 0)
      next += d[m_idx];
    else
      next -= d[m_idx];
    chis[m_idx] = std::move(next);
  }
  return chis;
}

CharPoly charpoly(const MatrixSpec& spec, std::uint32_t cap) {
  CharPoly out;
  out.n = spec.n;
  out.poly = charpoly_family(spec, cap).back();
  return out;
}

SingularB singular_b(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("singular_b: n must be positive");
  const MobiusTable mob = mobius_sieve(n);
  const FibCache fc = fib_cache(n);
  Rational sum = 0;
  for (std::uint32_t k = 1; k <= n; ++k) {
    const int mu = mob.mu[k];
    if (mu != 0) sum += Rational(mu) / Rational(fc.fib[k]);
  }
  SingularB out;
  out.b = -sum;
  out.boundary = out.b <= -1;
  return out;
}

}  // namespace redfib
