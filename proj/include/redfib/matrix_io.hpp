#ifndef REDFIB_MATRIX_IO_HPP
#define REDFIB_MATRIX_IO_HPP

#include <iosfwd>

#include "redfib/matrix.hpp"

namespace redfib {

// Matrix Market coordinate output (1-based indices, row-major order).
// Decimal mode writes plain "real general" values rounded to `digits`
// significant digits; exact mode writes values as p/q rationals and marks the
// file with an "%redfib exact-rational" comment so a round trip stays exact.
void write_matrix_market(std::ostream& out, const DivisorMatrix& matrix, bool exact_rationals,
                         int digits);

// Reads both plain decimal files and the exact-rational variant above.
// Only "matrix coordinate real general" headers are accepted.
SparseMatrix read_matrix_market(std::istream& in);

// Dense CSV (one row per line); sizes above the dense cap are refused.
void write_csv(std::ostream& out, const DivisorMatrix& matrix, int digits);

}  // namespace redfib

#endif
