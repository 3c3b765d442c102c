#include "redfib/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "redfib/numtheory.hpp"

namespace redfib {

namespace {

Rational abs_q(const Rational& v) { return v < 0 ? -v : v; }

MatrixSpec fibonacci_spec(std::uint32_t n) {
  MatrixSpec spec;
  spec.kind = MatrixKind::Fibonacci;
  spec.n = n;
  return spec;
}

// Exact-sign bracket list for the Fibonacci-weight spectrum. Endpoints are
// proposed by the interlacing pattern (1 and the Fibonacci numbers, with a
// widening search for the two outer ends) and then certified: n disjoint
// intervals, each with an exact sign change, pin all n roots at once.
std::vector<Bracket> fib_brackets_impl(const Poly& chi, std::uint32_t n) {
  std::vector<Bracket> out;
  if (n <= 2) {
    const std::vector<Rational> roots = rational_roots(chi);
    if (roots.size() != n)
      throw std::domain_error("brackets: tiny spectrum did not resolve to rational roots");
    for (const Rational& r : roots) out.push_back({r, r, true});
    return out;
  }

  const IntPoly ip = to_integer(chi);
  const std::uint32_t omega = n / 2;
  const FibCache fc = fib_cache(n + 2);

  const auto sign_at_int = [&](const BigInt& v) { return sign_at(ip, Rational(v)); };

  // Interior endpoints: 1, F_2 .. F_n. An exact zero at any of them would
  // break the isolation pattern, so it is a hard certification failure.
  std::vector<int> signs(n + 1, 0);  // signs[i] = sign of chi at F_i for i >= 2
  const int sign_at_one = sign_at(ip, Rational(1));
  if (sign_at_one == 0) throw std::domain_error("brackets: chi vanishes at 1");
  for (std::uint32_t i = 2; i <= n; ++i) {
    signs[i] = sign_at_int(fc.fib[i]);
    if (signs[i] == 0) throw std::domain_error("brackets: chi vanishes at a Fibonacci point");
  }

  // Left end: widen below -1 until the sign differs from the sign at 1.
  Rational lo = -1;
  for (int attempt = 0;; ++attempt) {
    const int s = sign_at(ip, lo);
    if (s == 0) throw std::domain_error("brackets: chi vanishes at a trial left endpoint");
    if (s != sign_at_one) break;
    if (attempt > 80) throw std::domain_error("brackets: no sign change found below 1");
    lo *= 2;
  }

  // Right end: start just past F_n + F_{omega+2} and widen away from F_n.
  Rational hi = Rational(fc.fib[n]) + Rational(fc.fib[omega + 2]) + 1;
  for (int attempt = 0;; ++attempt) {
    const int s = sign_at(ip, hi);
    if (s == 0) throw std::domain_error("brackets: chi vanishes at a trial right endpoint");
    if (s != signs[n]) break;
    if (attempt > 80) throw std::domain_error("brackets: no sign change found above F_n");
    hi = Rational(fc.fib[n]) + (hi - Rational(fc.fib[n])) * 2;
  }

  out.push_back({lo, Rational(1), false});
  for (std::uint32_t i = 2; i + 1 <= n; ++i) {
    if (signs[i] == signs[i + 1])
      throw std::domain_error("brackets: interior interval lost its sign change");
    out.push_back({Rational(fc.fib[i]), Rational(fc.fib[i + 1]), false});
  }
  out.push_back({Rational(fc.fib[n]), hi, false});
  return out;
}

// First-row residual of the computed right vector, scaled by the vector size
// and the eigenvalue magnitude.
Real right_residual(const DivisorMatrix& m, const Real& lambda, const std::vector<Real>& x) {
  const std::uint32_t n = m.size();
  Real row = to_real(m.corner()) * x[0] - lambda * x[0];
  for (std::uint32_t k = 2; k <= n; ++k) row += to_real(m.weight(1)) * x[k - 1];
  Real norm = 0;
  for (const Real& v : x)
    if (abs(v) > norm) norm = abs(v);
  if (norm == 0) return abs(row);
  return abs(row) / (norm * (Real(1) + abs(lambda)));
}

// Exact reduced row echelon kernel basis (free-variable parameterization).
std::vector<std::vector<Rational>> kernel_basis(DenseRat m) {
  const std::uint32_t n = m.cols;
  std::vector<std::uint32_t> pivot_col;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 1; col <= n && rank < m.rows; ++col) {
    std::uint32_t sel = 0;
    for (std::uint32_t r = rank + 1; r <= m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == 0) continue;
    for (std::uint32_t j = 1; j <= n; ++j) std::swap(m.at(sel, j), m.at(rank + 1, j));
    ++rank;
    const Rational piv = m.at(rank, col);
    for (std::uint32_t j = 1; j <= n; ++j) m.at(rank, j) /= piv;
    for (std::uint32_t r = 1; r <= m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (std::uint32_t j = 1; j <= n; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    pivot_col.push_back(col);
  }

  std::vector<bool> is_pivot(n + 1, false);
  for (std::uint32_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::uint32_t free = 1; free <= n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free - 1] = 1;
    for (std::uint32_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r] - 1] = -m.at(r + 1, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseRat shifted_dense(const MatrixSpec& spec, const Rational& lambda, bool transposed) {
  const DivisorMatrix m(spec);
  DenseRat a = m.to_dense();
  if (transposed) {
    DenseRat t(a.cols, a.rows);
    for (std::uint32_t i = 1; i <= a.rows; ++i)
      for (std::uint32_t j = 1; j <= a.cols; ++j) t.at(j, i) = a.at(i, j);
    a = std::move(t);
  }
  for (std::uint32_t i = 1; i <= a.rows; ++i) a.at(i, i) -= lambda;
  return a;
}

}  // namespace

std::vector<Bracket> brackets(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("brackets: n must be positive");
  const CharPoly cp = charpoly(fibonacci_spec(n));
  return fib_brackets_impl(cp.poly, n);
}

std::vector<Real> eigenvector(const MatrixSpec& spec, const Real& lambda) {
  spec.validate();
  const DivisorMatrix m(spec);
  const std::uint32_t n = m.size();
  std::vector<Real> x(n);
  x[0] = 1;
  for (std::uint32_t k = n; k >= 2; --k) {
    Real mult_sum = 0;
    for (std::uint64_t j = std::uint64_t(k) * 2; j <= n; j += k) mult_sum += x[j - 1];
    const Real denom = lambda - to_real(m.weight(k));
    if (denom == 0)
      throw std::domain_error("eigenvector: lambda collides with weight " + std::to_string(k));
    x[k - 1] = (x[0] + to_real(m.weight(k)) * mult_sum) / denom;
  }
  return x;
}

std::vector<Real> left_eigenvector(const MatrixSpec& spec, const Real& lambda) {
  spec.validate();
  const DivisorMatrix m(spec);
  const std::uint32_t n = m.size();
  std::vector<Real> y(n);
  y[0] = 1;
  for (std::uint32_t k = 2; k <= n; ++k) {
    Real dsum = 0;
    for (std::uint64_t d : divisors(k)) {
      if (d == k) break;
      dsum += to_real(m.weight(static_cast<std::uint32_t>(d))) * y[d - 1];
    }
    const Real denom = lambda - to_real(m.weight(k));
    if (denom == 0)
      throw std::domain_error("left_eigenvector: lambda collides with weight " + std::to_string(k));
    y[k - 1] = dsum / denom;
  }
  return y;
}

std::vector<std::vector<Rational>> eigenvector_exact(const MatrixSpec& spec,
                                                     const Rational& lambda) {
  spec.validate();
  return kernel_basis(shifted_dense(spec, lambda, false));
}

std::vector<std::vector<Rational>> left_eigenvector_exact(const MatrixSpec& spec,
                                                          const Rational& lambda) {
  spec.validate();
  return kernel_basis(shifted_dense(spec, lambda, true));
}

QSample q_eval(const MatrixSpec& spec, const Real& z) {
  spec.validate();
  const DivisorMatrix m(spec);
  QSample sample;
  sample.z = z;
  sample.x = eigenvector(spec, z);
  Real tail = 0;
  for (std::uint32_t k = 2; k <= m.size(); ++k) tail += sample.x[k - 1];
  sample.q = (to_real(m.corner()) - z) + to_real(m.weight(1)) * tail;
  return sample;
}

Rational q_eval_exact(const MatrixSpec& spec, const Rational& z) {
  spec.validate();
  const DivisorMatrix m(spec);
  const std::uint32_t n = m.size();
  std::vector<Rational> x(n);
  x[0] = 1;
  for (std::uint32_t k = n; k >= 2; --k) {
    Rational mult_sum = 0;
    for (std::uint64_t j = std::uint64_t(k) * 2; j <= n; j += k) mult_sum += x[j - 1];
    const Rational denom = z - m.weight(k);
    if (denom == 0)
      throw std::domain_error("q_eval_exact: z is a pole (weight " + std::to_string(k) + ")");
    x[k - 1] = (x[0] + m.weight(k) * mult_sum) / denom;
  }
  Rational tail = 0;
  for (std::uint32_t k = 2; k <= n; ++k) tail += x[k - 1];
  return (m.corner() - z) + m.weight(1) * tail;
}

std::vector<Disk> gershgorin(const DivisorMatrix& matrix) {
  const std::uint32_t n = matrix.size();
  std::vector<Disk> disks;
  disks.reserve(n);
  disks.push_back({1, matrix.corner(), abs_q(matrix.weight(1)) * Rational(n - 1)});
  for (std::uint32_t i = 2; i <= n; ++i) {
    const Rational r = Rational(1) + abs_q(matrix.weight(i)) * Rational(n / i - 1);
    disks.push_back({i, matrix.weight(i), r});
  }
  return disks;
}

namespace {

// Shared assembly of one certified real eigenpair.
EigenPair make_real_pair(const DivisorMatrix& m, const MatrixSpec& spec, const Bracket& br,
                         int multiplicity) {
  EigenPair p;
  p.certified = true;
  p.bracket = br;
  p.multiplicity = multiplicity;
  const Rational lambda_q = br.exact ? br.lo : (br.lo + br.hi) / 2;
  p.value = to_real(lambda_q);

  bool collides = false;
  for (std::uint32_t k = 2; k <= m.size(); ++k)
    if (m.weight(k) == lambda_q) collides = true;

  if (br.exact) {
    // Exact eigenvalue: kernel solve (also covers lambda equal to a weight,
    // where the divisor recursion has a pole).
    const auto right = eigenvector_exact(spec, lambda_q);
    const auto left = left_eigenvector_exact(spec, lambda_q);
    if (!right.empty()) {
      p.right.reserve(right[0].size());
      for (const Rational& v : right[0]) p.right.push_back(to_real(v));
    }
    if (!left.empty()) {
      p.left.reserve(left[0].size());
      for (const Rational& v : left[0]) p.left.push_back(to_real(v));
    }
    if (!p.right.empty()) p.residual = right_residual(m, p.value, p.right);
    return p;
  }

  Rational point = lambda_q;
  if (collides) {
    point = (br.lo + Rational(3) * br.hi) / 4;  // nudge off the weight
    for (std::uint32_t k = 2; k <= m.size(); ++k)
      if (m.weight(k) == point) point = (Rational(3) * br.lo + br.hi) / 4;
  }
  p.value = to_real(point);
  try {
    p.right = eigenvector(spec, p.value);
    p.left = left_eigenvector(spec, p.value);
    p.residual = right_residual(m, p.value, p.right);
  } catch (const std::domain_error&) {
    p.right.clear();  // evaluation point hit a weight exactly; report value only
    p.left.clear();
  }
  return p;
}

}  // namespace

std::vector<EigenPair> eigen_generalized(const MatrixSpec& spec, double tol) {
  spec.validate();
  const DivisorMatrix m(spec);
  if (m.approximate())
    throw unsupported_exact("eigen_generalized: certified spectra need an exact weight sequence");
  if (!(tol > 0)) throw std::invalid_argument("eigen_generalized: tolerance must be positive");

  const Poly chi = charpoly(spec).poly;
  const Rational width(tol);

  std::vector<EigenPair> reals;
  std::vector<EigenPair> complexes;
  for (const auto& [factor, mult] : squarefree_decomposition(chi)) {
    Poly remaining = factor;
    for (const Rational& root : rational_roots(factor)) {
      Poly quot, rem;
      Poly::divmod(remaining, Poly::linear(-root, 1), quot, rem);
      if (!rem.is_zero()) throw std::domain_error("eigen_generalized: inconsistent rational root");
      remaining = quot;
      reals.push_back(make_real_pair(m, spec, Bracket{root, root, true}, mult));
    }
    if (remaining.degree() >= 1) {
      const IntPoly irem = to_integer(remaining);
      const auto intervals = isolate_real_roots(remaining);
      for (const RootInterval& iv : intervals) {
        const RootInterval fine = refine_root(irem, iv, width);
        reals.push_back(make_real_pair(
            m, spec, Bracket{fine.lo, fine.hi, fine.exact}, mult));
      }
      const int complex_count = remaining.degree() - static_cast<int>(intervals.size());
      if (complex_count > 0) {
        auto numeric = all_roots_numeric(remaining);
        std::sort(numeric.begin(), numeric.end(), [](const auto& a, const auto& b) {
          return std::abs(a.second) < std::abs(b.second);
        });
        numeric.erase(numeric.begin(), numeric.end() - complex_count);
        std::sort(numeric.begin(), numeric.end());
        for (const auto& [re, im] : numeric) {
          EigenPair p;
          p.is_complex = true;
          p.certified = false;
          p.multiplicity = mult;
          p.value = re;
          p.value_imag = im;
          complexes.push_back(std::move(p));
        }
      }
    }
  }

  std::sort(reals.begin(), reals.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
  std::uint32_t index = 1;
  for (EigenPair& p : reals) p.index = index++;
  for (EigenPair& p : complexes) p.index = index++;
  reals.insert(reals.end(), std::make_move_iterator(complexes.begin()),
               std::make_move_iterator(complexes.end()));
  return reals;
}

std::vector<EigenPair> eigenvalues(const MatrixSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0)) throw std::invalid_argument("eigenvalues: tolerance must be positive");
  if (spec.kind == MatrixKind::Classic)
    throw std::invalid_argument(
        "eigenvalues: the classic 0/1 spectrum is outside this library's scope");
  if (spec.kind != MatrixKind::Fibonacci) return eigen_generalized(spec, tol);

  const DivisorMatrix m(spec);
  const std::uint32_t n = spec.n;
  const CharPoly cp = charpoly(spec);
  const std::vector<Bracket> brs = fib_brackets_impl(cp.poly, n);
  const IntPoly ip = to_integer(cp.poly);
  const Rational width(tol);

  std::vector<EigenPair> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Bracket br = brs[i];
    if (!br.exact) {
      const RootInterval fine = refine_root(ip, RootInterval{br.lo, br.hi, false}, width);
      br = Bracket{fine.lo, fine.hi, fine.exact};
    }
    EigenPair p = make_real_pair(m, spec, br, 1);
    p.index = i + 1;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ScanRow> conjecture_scan(std::uint32_t n_max, double tol) {
  if (n_max < 3) throw std::invalid_argument("conjecture_scan: needs n_max >= 3");
  std::vector<ScanRow> rows;
  const FibCache fc = fib_cache(n_max + 1);
  for (std::uint32_t n = 3; n <= n_max; ++n) {
    const auto eigs = eigenvalues(fibonacci_spec(n), tol);
    ScanRow row;
    row.n = n;
    row.lambda1 = eigs[0].value;
    row.lambda1_in_unit = (row.lambda1 > -1) && (row.lambda1 < 0);
    row.upper_shift_ok = true;
    for (std::uint32_t i = 2; i + 1 <= n; ++i)
      if (!(eigs[i - 1].value < to_real(fc.fib[i]) + 1)) row.upper_shift_ok = false;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace redfib
