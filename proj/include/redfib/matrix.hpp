#ifndef REDFIB_MATRIX_HPP
#define REDFIB_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "redfib/numtheory.hpp"
#include "redfib/scalar.hpp"

namespace redfib {

// Which weight family sits on the divisor pattern.
//
//   Classic          w_i = 1,   corner 1      (the 0/1 divisibility matrix)
//   Fibonacci        w_i = F_i, corner 1
//   FibonacciVariant w_i = F_i, corner 1 + b  (only the (1,1) entry moves)
//   Generalized      w_i = a_{i+t} from a user sequence, corner a_{1+t}
enum class MatrixKind { Classic, Fibonacci, FibonacciVariant, Generalized };

std::string kind_name(MatrixKind kind);
MatrixKind kind_from_name(const std::string& name);

// User-supplied weight sequence for the Generalized kind. `approximate`
// marks sequences whose entries are decimal approximations of irrational
// values; exact-arithmetic operations refuse such input.
struct GenSequence {
  std::vector<Rational> values;  // values[i] is a_{i+1}, i.e. 1-based a_k at values[k-1]
  bool approximate = false;
};

struct MatrixSpec {
  MatrixKind kind = MatrixKind::Classic;
  std::uint32_t n = 1;
  Rational corner_offset_b = 0;  // FibonacciVariant only; requires b > -1
  std::uint32_t row_offset = 0;  // Generalized only: weight of row i is a_{i+offset}
  GenSequence sequence;          // Generalized only; needs n + row_offset terms

  void validate() const;  // throws std::invalid_argument on bad combinations
};

// Minimal dense rational matrix used wherever an explicit small matrix is
// convenient (inverses, decompositions, elimination oracles).
struct DenseRat {
  std::uint32_t rows = 0, cols = 0;
  std::vector<Rational> data;  // row-major

  DenseRat() = default;
  DenseRat(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  Rational& at(std::uint32_t i, std::uint32_t j) {  // 1-based
    return data[std::size_t(i - 1) * cols + (j - 1)];
  }
  const Rational& at(std::uint32_t i, std::uint32_t j) const {
    return data[std::size_t(i - 1) * cols + (j - 1)];
  }

  static DenseRat identity(std::uint32_t n);
};

DenseRat multiply(const DenseRat& a, const DenseRat& b);

// Sparse coordinate list; rows/cols are 1-based.
struct SparseEntry {
  std::uint32_t row = 0, col = 0;
  Rational value;
};

struct SparseMatrix {
  std::uint32_t n = 0;
  std::vector<SparseEntry> entries;  // sorted row-major

  DenseRat to_dense() const;
};

// The divisor-pattern matrix itself. Entries are defined implicitly:
//   column 1:  corner in row 1, weight w_i for rows i >= 2 with i | 1 never
//              holding, so rows i >= 2 carry a plain 1 there;
//   column j >= 2: w_i when i divides j, 0 otherwise.
// Storage is the weight vector only; dense forms are materialized on demand.
class DivisorMatrix {
 public:
  explicit DivisorMatrix(const MatrixSpec& spec);

  const MatrixSpec& spec() const { return m_spec; }
  std::uint32_t size() const { return m_spec.n; }
  bool approximate() const { return m_spec.kind == MatrixKind::Generalized && m_spec.sequence.approximate; }

  // Weight of row i (the value placed on divisor positions), 1-based.
  const Rational& weight(std::uint32_t i) const;
  // The (1,1) entry; equals weight(1) except for FibonacciVariant.
  const Rational& corner() const { return m_corner; }

  Rational entry(std::uint32_t i, std::uint32_t j) const;  // 1-based, zero-filled

  // Nonzero columns of row i in ascending order: the multiples of i, plus
  // column 1 for every row (first column is all ones below the corner).
  std::vector<std::uint32_t> row_support(std::uint32_t i) const;

  std::uint64_t nnz() const;

  DenseRat to_dense(std::uint32_t cap = kDenseCap) const;  // throws if n > cap
  SparseMatrix to_sparse() const;

  static constexpr std::uint32_t kDenseCap = 512;

 private:
  MatrixSpec m_spec;
  std::vector<Rational> m_weights;  // m_weights[i] = w_i, index 0 unused
  Rational m_corner;
};

DivisorMatrix build(const MatrixSpec& spec);

// Upper-triangular part D of the C + D splitting, inverted in closed form:
// (D^-1)_{ij} = mu(j/i) / w_j when i | j, 0 otherwise. Exact kinds only.
DenseRat d_inverse(const MatrixSpec& spec, std::uint32_t cap = DivisorMatrix::kDenseCap);

// Additive splittings of the matrix.
//   CPlusD: C has the sub-corner first column (and nothing else), D is the
//           upper-triangular divisor part including the diagonal.
//   TPlusM: M is the rank-one all-ones first column, T is the remainder
//           (corner becomes corner - 1).
enum class DecompKind { CPlusD, TPlusM };

struct Decomposition {
  DecompKind kind = DecompKind::CPlusD;
  SparseMatrix first;   // C or T
  SparseMatrix second;  // D or M
};

Decomposition decompose(const DivisorMatrix& matrix, DecompKind kind);

// Exact nonzero count for size n together with the n log n + (2 gamma) n
// density estimate and their ratio.
struct SparsityInfo {
  std::uint64_t n = 0;
  std::uint64_t exact = 0;
  double estimate = 0.0;
  double ratio = 0.0;  // exact / estimate
};

SparsityInfo nnz_count(std::uint64_t n);

}  // namespace redfib

#endif
