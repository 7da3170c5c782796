// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_MATRIX_MARKET_HPP
#define MAMG_MATRIX_MARKET_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

#include <iosfwd>
#include <string>

namespace mamg {

/// Matrix Market coordinate format. Symmetric matrices may be written in
/// symmetric storage (lower triangle); readers expand to full storage.
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market_file(const std::string& path);

void write_matrix_market(std::ostream& out, const SparseMatrix& A, bool use_symmetric_storage = true);
void write_matrix_market_file(const std::string& path, const SparseMatrix& A, bool use_symmetric_storage = true);

/// Plain-text vectors, one value per line.
DenseVector read_vector(std::istream& in);
DenseVector read_vector_file(const std::string& path);
void write_vector(std::ostream& out, const DenseVector& v);
void write_vector_file(const std::string& path, const DenseVector& v);

} // namespace mamg

#endif // MAMG_MATRIX_MARKET_HPP
