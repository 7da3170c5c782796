// SPDX-License-Identifier: Apache-2.0

#include "mamg/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mamg {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix market: empty stream");
    std::istringstream hdr(line);
    std::string banner, object, format, field, symmetry;
    hdr >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate")
        throw std::invalid_argument("matrix market: unsupported header: " + line);
    if (lower(field) != "real" && lower(field) != "integer")
        throw std::invalid_argument("matrix market: unsupported field type: " + field);
    const std::string sym = lower(symmetry);
    if (sym != "general" && sym != "symmetric")
        throw std::invalid_argument("matrix market: unsupported symmetry: " + symmetry);

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    std::istringstream dims(line);
    index_t n_rows = 0, n_cols = 0;
    long long nnz = 0;
    if (!(dims >> n_rows >> n_cols >> nnz)) throw std::invalid_argument("matrix market: bad size line");

    std::vector<std::tuple<index_t, index_t, double>> trip;
    trip.reserve(static_cast<std::size_t>(sym == "symmetric" ? 2 * nnz : nnz));
    for (long long k = 0; k < nnz; ++k) {
        index_t i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) throw std::invalid_argument("matrix market: truncated entries");
        --i;
        --j;
        trip.emplace_back(i, j, v);
        if (sym == "symmetric" && i != j) trip.emplace_back(j, i, v);
    }
    return SparseMatrix::from_triplets(n_rows, n_cols, std::move(trip), sym == "symmetric");
}

SparseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& A, bool use_symmetric_storage) {
    const bool sym = use_symmetric_storage && A.symmetric;
    out << "%%MatrixMarket matrix coordinate real " << (sym ? "symmetric" : "general") << "\n";
    index_t count = 0;
    for (index_t i = 0; i < A.n_rows; ++i)
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p)
            if (!sym || A.col_indices[static_cast<std::size_t>(p)] <= i) ++count;
    out << A.n_rows << " " << A.n_cols << " " << count << "\n";
    char buf[64];
    for (index_t i = 0; i < A.n_rows; ++i) {
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            if (sym && j > i) continue;
            std::snprintf(buf, sizeof(buf), "%.17g", A.values[static_cast<std::size_t>(p)]);
            out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
        }
    }
}

void write_matrix_market_file(const std::string& path, const SparseMatrix& A, bool use_symmetric_storage) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    write_matrix_market(out, A, use_symmetric_storage);
}

DenseVector read_vector(std::istream& in) {
    DenseVector v;
    double x = 0.0;
    while (in >> x) v.push_back(x);
    return v;
}

DenseVector read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_vector(in);
}

void write_vector(std::ostream& out, const DenseVector& v) {
    char buf[64];
    for (double x : v) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << buf << "\n";
    }
}

void write_vector_file(const std::string& path, const DenseVector& v) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    write_vector(out, v);
}

} // namespace mamg
