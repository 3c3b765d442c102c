#include "redfib/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace redfib {

std::string kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Classic: return "classic";
    case MatrixKind::Fibonacci: return "fibonacci";
    case MatrixKind::FibonacciVariant: return "fibonacci-variant";
    case MatrixKind::Generalized: return "generalized";
  }
  throw std::invalid_argument("kind_name: unknown kind");
}

MatrixKind kind_from_name(const std::string& name) {
  if (name == "classic") return MatrixKind::Classic;
  if (name == "fibonacci") return MatrixKind::Fibonacci;
  if (name == "fibonacci-variant" || name == "variant") return MatrixKind::FibonacciVariant;
  if (name == "generalized") return MatrixKind::Generalized;
  throw std::invalid_argument("unknown matrix kind: '" + name + "'");
}

void MatrixSpec::validate() const {
  if (n == 0) throw std::invalid_argument("MatrixSpec: size must be at least 1");
  if (kind != MatrixKind::FibonacciVariant && corner_offset_b != 0)
    throw std::invalid_argument("MatrixSpec: corner offset is only meaningful for the variant kind");
  if (kind != MatrixKind::Generalized) {
    if (row_offset != 0)
      throw std::invalid_argument("MatrixSpec: row offset is only meaningful for the generalized kind");
    if (!sequence.values.empty())
      throw std::invalid_argument("MatrixSpec: weight sequence is only meaningful for the generalized kind");
  }
  if (kind == MatrixKind::FibonacciVariant && corner_offset_b <= -1)
    throw std::invalid_argument("MatrixSpec: variant corner offset must satisfy b > -1");
  if (kind == MatrixKind::Generalized) {
    const std::size_t needed = std::size_t(n) + row_offset;
    if (sequence.values.size() < needed)
      throw std::invalid_argument("MatrixSpec: generalized kind needs " + std::to_string(needed) +
                                  " sequence terms, got " + std::to_string(sequence.values.size()));
    for (std::size_t k = 0; k < needed; ++k)
      if (sequence.values[k] == 0)
        throw std::invalid_argument("MatrixSpec: sequence term " + std::to_string(k + 1) + " is zero");
  }
}

DenseRat DenseRat::identity(std::uint32_t n) {
  DenseRat m(n, n);
  for (std::uint32_t i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

DenseRat multiply(const DenseRat& a, const DenseRat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: incompatible shapes");
  DenseRat out(a.rows, b.cols);
  for (std::uint32_t i = 1; i <= a.rows; ++i)
    for (std::uint32_t k = 1; k <= a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 1; j <= b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

DenseRat SparseMatrix::to_dense() const {
  DenseRat out(n, n);
  for (const SparseEntry& e : entries) out.at(e.row, e.col) = e.value;
  return out;
}

DivisorMatrix::DivisorMatrix(const MatrixSpec& spec) : m_spec(spec) {
  m_spec.validate();
  const std::uint32_t n = m_spec.n;
  m_weights.assign(std::size_t(n) + 1, Rational(0));
  switch (m_spec.kind) {
    case MatrixKind::Classic:
      for (std::uint32_t i = 1; i <= n; ++i) m_weights[i] = 1;
      m_corner = 1;
      break;
    case MatrixKind::Fibonacci:
    case MatrixKind::FibonacciVariant: {
      const FibCache fc = fib_cache(n);
      for (std::uint32_t i = 1; i <= n; ++i) m_weights[i] = Rational(fc.fib[i]);
      m_corner = m_spec.kind == MatrixKind::FibonacciVariant ? Rational(1) + m_spec.corner_offset_b
                                                             : Rational(1);
      break;
    }
    case MatrixKind::Generalized:
      for (std::uint32_t i = 1; i <= n; ++i)
        m_weights[i] = m_spec.sequence.values[std::size_t(i) + m_spec.row_offset - 1];
      m_corner = m_weights[1];
      break;
  }
}

const Rational& DivisorMatrix::weight(std::uint32_t i) const {
  if (i == 0 || i > m_spec.n) throw std::out_of_range("DivisorMatrix::weight: row out of range");
  return m_weights[i];
}

Rational DivisorMatrix::entry(std::uint32_t i, std::uint32_t j) const {
  if (i == 0 || j == 0 || i > m_spec.n || j > m_spec.n)
    throw std::out_of_range("DivisorMatrix::entry: index out of range");
  if (j == 1) return i == 1 ? m_corner : Rational(1);
  if (j % i == 0) return m_weights[i];
  return Rational(0);
}

std::vector<std::uint32_t> DivisorMatrix::row_support(std::uint32_t i) const {
  if (i == 0 || i > m_spec.n) throw std::out_of_range("DivisorMatrix::row_support: row out of range");
  std::vector<std::uint32_t> cols;
  if (i >= 2) cols.push_back(1);
  for (std::uint64_t j = i; j <= m_spec.n; j += i) cols.push_back(static_cast<std::uint32_t>(j));
  return cols;
}

std::uint64_t DivisorMatrix::nnz() const {
  const std::uint64_t n = m_spec.n;
  std::uint64_t total = n;  // dense first row
  for (std::uint64_t i = 2; i <= n; ++i) total += 1 + n / i;
  return total;
}

DenseRat DivisorMatrix::to_dense(std::uint32_t cap) const {
  if (m_spec.n > cap)
    throw std::invalid_argument("DivisorMatrix::to_dense: size exceeds the dense cap of " +
                                std::to_string(cap));
  DenseRat out(m_spec.n, m_spec.n);
  for (std::uint32_t i = 1; i <= m_spec.n; ++i)
    for (std::uint32_t j : row_support(i)) out.at(i, j) = entry(i, j);
  return out;
}

SparseMatrix DivisorMatrix::to_sparse() const {
  SparseMatrix out;
  out.n = m_spec.n;
  out.entries.reserve(nnz());
  for (std::uint32_t i = 1; i <= m_spec.n; ++i)
    for (std::uint32_t j : row_support(i)) out.entries.push_back({i, j, entry(i, j)});
  return out;
}

DivisorMatrix build(const MatrixSpec& spec) { return DivisorMatrix(spec); }

DenseRat d_inverse(const MatrixSpec& spec, std::uint32_t cap) {
  spec.validate();
  const DivisorMatrix m(spec);
  if (m.approximate())
    throw unsupported_exact("d_inverse: exact inverse needs an exact weight sequence");
  const std::uint32_t n = spec.n;
  if (n > cap)
    throw std::invalid_argument("d_inverse: size exceeds the dense cap of " + std::to_string(cap));
  const MobiusTable mob = mobius_sieve(n);
  DenseRat out(n, n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    const Rational wj = m.weight(j);
    for (std::uint64_t d : divisors(j)) {
      const std::uint32_t i = static_cast<std::uint32_t>(d);
      const int mu = mob.mu[j / i];
      if (mu != 0) out.at(i, j) = Rational(mu) / wj;
    }
  }
  return out;
}

Decomposition decompose(const DivisorMatrix& matrix, DecompKind kind) {
  const std::uint32_t n = matrix.size();
  Decomposition out;
  out.kind = kind;
  out.first.n = out.second.n = n;
  const Rational corner_rest = matrix.corner() - 1;  // what the column part leaves behind

  if (kind == DecompKind::CPlusD) {
    // C: first column with the corner reduced by w_1; D: divisor part, where
    // row 1 carries w_1 everywhere (so D alone is the Lemma-style triangle).
    const Rational c11 = matrix.corner() - matrix.weight(1);
    if (c11 != 0) out.first.entries.push_back({1, 1, c11});
    for (std::uint32_t i = 2; i <= n; ++i) out.first.entries.push_back({i, 1, Rational(1)});
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint64_t j = i; j <= n; j += i)
        out.second.entries.push_back({i, static_cast<std::uint32_t>(j), matrix.weight(i)});
    return out;
  }

  // TPlusM: M is the all-ones first column (rank one); T keeps everything
  // else, with corner - 1 at (1,1) and an empty first column below it.
  if (corner_rest != 0) out.first.entries.push_back({1, 1, corner_rest});
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint64_t j = (i == 1 ? 2 : i); j <= n; j += i)
      out.first.entries.push_back({i, static_cast<std::uint32_t>(j), matrix.weight(i)});
  for (std::uint32_t i = 1; i <= n; ++i) out.second.entries.push_back({i, 1, Rational(1)});
  return out;
}

SparsityInfo nnz_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nnz_count: size must be positive");
  // Divisor-summatory sum via the hyperbola method: sum over i of floor(n/i).
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  std::uint64_t dsum = 0;
  for (std::uint64_t i = 1; i <= root; ++i) dsum += n / i;
  dsum = 2 * dsum - root * root;

  SparsityInfo info;
  info.n = n;
  info.exact = dsum + n - 1;
  const double gamma = 0.5772156649015328606;
  info.estimate = static_cast<double>(n) * std::log(static_cast<double>(n)) +
                  2.0 * gamma * static_cast<double>(n);
  info.ratio = static_cast<double>(info.exact) / info.estimate;
  return info;
}

}  // namespace redfib
