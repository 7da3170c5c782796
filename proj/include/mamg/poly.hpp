// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_POLY_HPP
#define MAMG_POLY_HPP

#include "mamg/accelerators.hpp"
#include "mamg/types.hpp"

#include <vector>

namespace mamg {

/// Error-polynomial families of the three semi-iterative coarse solvers. Each
/// is defined by the same three-term recurrence the iteration executes, so the
/// analyzed polynomial and the implemented method coincide by construction:
///   Chebyshev: p0 = 1, p1 = 1 - x,     p_{j+1} = w_j (1-x) p_j + (1-w_j) p_{j-1}
///   HeavyBall: p0 = 1, p1 = 1 - q0 x,  p_{j+1} = (1-a x) p_j + b (p_j - p_{j-1})
///   Nesterov:  p0 = 1, p1 = 1 - x/L,   p_{j+1} = (1+b)(1-x/L) p_j - b (1-x/L) p_{j-1}
/// All satisfy p_k(0) = 1. The companion approximants q_k of 1/x obey
/// p_k = 1 - x q_{k-1}.
enum class PolyFamily { Chebyshev, HeavyBall, Nesterov };

struct PolynomialSpec {
    PolyFamily family = PolyFamily::Chebyshev;
    int degree = 2;
    SpectralBounds interval;

    void validate() const;
};

/// Chebyshev polynomial of the first kind by the three-term recurrence.
double cheb_T(int k, double t);

/// Error polynomial p_k at x.
double p_eval(const PolynomialSpec& spec, double x);

/// 1/x-approximant q_k at x (HeavyBall and Nesterov families only; the heavy
/// ball family requires lambda_min > 0, otherwise q0 is undefined).
double q_eval(const PolynomialSpec& spec, double x);

/// (x, p_k(x)) samples over a grid, for regenerating the comparison curves.
std::vector<std::pair<double, double>> curve_data(const PolynomialSpec& spec,
                                                  const std::vector<double>& grid);

/// Convergence-bound factors. hb: ((k-1)/2)((sqrt(k)-1)/(sqrt(k)+1))^{k-1}
/// applied to kappa; na: 2(1 - 1/sqrt(kappa))^k.
double hb_bound(double kappa, int k);
double na_bound(double kappa, int k);

/// Threshold family for the uniform-convergence conditions of the momentum
/// cycles (H: heavy ball, N: Nesterov).
enum class ThresholdFamily { H, N };

struct ThresholdResult {
    double delta = 0.0;     // cycle-level bound at which the optimum is attained
    double delta_TG = 0.0;  // supremal admissible two-grid convergence factor
    int k = 0;
};

/// Admissibility of a cycle-level bound delta for the given family and k
/// (positivity of the heavy-ball denominator, amplification below one for
/// Nesterov).
bool threshold_admissible(ThresholdFamily family, int k, double delta);

/// Supremal two-grid convergence factor delta_TG for which the k-step
/// momentum cycle is uniformly convergent: minimizes
/// (1-delta)/(1-s(delta,k)) over admissible delta (bracketed scan plus
/// golden-section refinement to 1e-12 in delta) and returns
/// delta_TG = 1 - min. The returned pair satisfies the defining equality to
/// 1e-10.
ThresholdResult solve_threshold(ThresholdFamily family, int k);

} // namespace mamg

#endif // MAMG_POLY_HPP
