#include "redfib/matrix_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace redfib {

void write_matrix_market(std::ostream& out, const DivisorMatrix& matrix, bool exact_rationals,
                         int digits) {
  if (exact_rationals && matrix.approximate())
    throw unsupported_exact("write_matrix_market: exact output needs an exact weight sequence");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << "% divisor-pattern matrix, kind " << kind_name(matrix.spec().kind) << ", n "
      << matrix.size() << "\n";
  if (exact_rationals) out << "%redfib exact-rational\n";
  const SparseMatrix sp = matrix.to_sparse();
  out << matrix.size() << ' ' << matrix.size() << ' ' << sp.entries.size() << '\n';
  for (const SparseEntry& e : sp.entries) {
    out << e.row << ' ' << e.col << ' ';
    if (exact_rationals)
      out << rational_string(e.value);
    else
      out << decimal_string(e.value, digits);
    out << '\n';
  }
}

SparseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("matrix market: empty input");
  {
    std::istringstream banner(line);
    std::string tag, object, format, field, symmetry;
    banner >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%MatrixMarket" || object != "matrix" || format != "coordinate" ||
        field != "real" || symmetry != "general")
      throw std::invalid_argument("matrix market: unsupported header '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    break;
  }
  std::istringstream sizes(line);
  std::uint64_t rows = 0, cols = 0, count = 0;
  if (!(sizes >> rows >> cols >> count) || rows != cols || rows == 0)
    throw std::invalid_argument("matrix market: bad size line '" + line + "'");

  SparseMatrix sp;
  sp.n = static_cast<std::uint32_t>(rows);
  sp.entries.reserve(count);
  while (sp.entries.size() < count) {
    if (!std::getline(in, line)) throw std::invalid_argument("matrix market: truncated entry list");
    if (!line.empty() && line[0] == '%') continue;
    std::istringstream entry(line);
    std::uint32_t i = 0, j = 0;
    std::string value;
    if (!(entry >> i >> j >> value))
      throw std::invalid_argument("matrix market: bad entry line '" + line + "'");
    if (i == 0 || j == 0 || i > rows || j > cols)
      throw std::invalid_argument("matrix market: entry index out of range in '" + line + "'");
    sp.entries.push_back({i, j, parse_rational(value)});
  }
  std::sort(sp.entries.begin(), sp.entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return sp;
}

void write_csv(std::ostream& out, const DivisorMatrix& matrix, int digits) {
  const DenseRat dense = matrix.to_dense();
  for (std::uint32_t i = 1; i <= dense.rows; ++i) {
    for (std::uint32_t j = 1; j <= dense.cols; ++j) {
      if (j > 1) out << ',';
      out << decimal_string(dense.at(i, j), digits);
    }
    out << '\n';
  }
}

}  // namespace redfib
