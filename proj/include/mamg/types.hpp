// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_TYPES_HPP
#define MAMG_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mamg {

using index_t = std::int32_t;

/// Dense vector of doubles; length always matches the operating matrix dimension.
using DenseVector = std::vector<double>;

/// Setup-time failure: non-SPD pivot, aggregation stagnation, bad problem spec.
struct SetupError : std::runtime_error {
    explicit SetupError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Solver blow-up detected mid-iteration (indefinite direction, non-SPD probe).
/// The outer stationary solver catches this and reports status Diverged.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mamg

#endif // MAMG_TYPES_HPP
