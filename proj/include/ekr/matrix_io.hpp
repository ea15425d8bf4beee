#pragma once

#include "ekr/matrix.hpp"

#include <iosfwd>

namespace ekr {

/// Exchange format for symmetric rational matrices:
///   line 1: `rational-coo N N nnz`
///   then one line per upper-triangle nonzero: `row col p/q` (0-based,
///   row <= col); the lower triangle is implied by symmetry.
/// Serialization is lossless: read_matrix_coo(write_matrix_coo(M)) == M.
void write_matrix_coo(std::ostream& out, const DenseRationalMatrix& m);

DenseRationalMatrix read_matrix_coo(std::istream& in);

} // namespace ekr
