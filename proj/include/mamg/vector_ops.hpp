// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_VECTOR_OPS_HPP
#define MAMG_VECTOR_OPS_HPP

#include "mamg/types.hpp"

#include <cmath>
#include <cstddef>

namespace mamg {

inline double dot(const DenseVector& x, const DenseVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const DenseVector& x) { return std::sqrt(dot(x, x)); }

/// y += a*x
inline void axpy(double a, const DenseVector& x, DenseVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline void scale(double a, DenseVector& x) {
    for (double& v : x) v *= a;
}

inline DenseVector zeros(std::size_t n) { return DenseVector(n, 0.0); }

inline bool all_finite(const DenseVector& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace mamg

#endif // MAMG_VECTOR_OPS_HPP
