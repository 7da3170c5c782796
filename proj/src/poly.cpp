// SPDX-License-Identifier: Apache-2.0

#include "mamg/poly.hpp"

#include <cmath>
#include <limits>

namespace mamg {

void PolynomialSpec::validate() const {
    if (degree < 0) throw std::invalid_argument("PolynomialSpec: degree must be >= 0");
    interval.validate();
    if (family == PolyFamily::HeavyBall && interval.lambda_min == 0.0)
        throw std::invalid_argument(
            "PolynomialSpec: heavy-ball polynomial undefined for lambda_min = 0 (q0 divides by lambda_min)");
}

double cheb_T(int k, double t) {
    if (k < 0) throw std::invalid_argument("cheb_T: k must be >= 0");
    double prev = 1.0;  // C_0
    if (k == 0) return prev;
    double cur = t;  // C_1
    for (int j = 2; j <= k; ++j) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double p_eval(const PolynomialSpec& spec, double x) {
    spec.validate();
    const int k = spec.degree;
    const double lmin = spec.interval.lambda_min;
    const double lmax = spec.interval.lambda_max;

    if (k == 0) return 1.0;

    switch (spec.family) {
        case PolyFamily::Chebyshev: {
            const double rho = 1.0 - lmin / lmax;
            if (rho == 0.0) return std::pow(1.0 - x / lmax, k);  // Richardson collapse
            double p_prev = 1.0;
            double p = 1.0 - x;
            const double t = 1.0 / rho;
            double ratio = t;  // C_{j+1}/C_j
            for (int j = 1; j < k; ++j) {
                ratio = 2.0 * t - 1.0 / ratio;
                const double omega = 2.0 / (rho * ratio);
                const double p_next = omega * (1.0 - x) * p + (1.0 - omega) * p_prev;
                p_prev = p;
                p = p_next;
            }
            return p;
        }
        case PolyFamily::HeavyBall: {
            const double sl = std::sqrt(lmax), sm = std::sqrt(lmin);
            const double alpha = 4.0 / ((sl + sm) * (sl + sm));
            const double beta = ((sl - sm) / (sl + sm)) * ((sl - sm) / (sl + sm));
            const double q0 = 0.5 / lmax + 0.5 / lmin;
            double p_prev = 1.0;
            double p = 1.0 - q0 * x;
            for (int j = 1; j < k; ++j) {
                const double p_next = (1.0 - alpha * x) * p + beta * (p - p_prev);
                p_prev = p;
                p = p_next;
            }
            return p;
        }
        case PolyFamily::Nesterov: {
            const double sl = std::sqrt(lmax), sm = std::sqrt(lmin);
            const double beta = (sl - sm) / (sl + sm);
            const double s = 1.0 - x / lmax;
            double p_prev = 1.0;
            double p = s;
            for (int j = 1; j < k; ++j) {
                const double p_next = (1.0 + beta) * s * p - beta * s * p_prev;
                p_prev = p;
                p = p_next;
            }
            return p;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double q_eval(const PolynomialSpec& spec, double x) {
    spec.validate();
    if (spec.family == PolyFamily::Chebyshev)
        throw std::invalid_argument("q_eval: defined for the HeavyBall and Nesterov families only");
    const int k = spec.degree;
    const double lmin = spec.interval.lambda_min;
    const double lmax = spec.interval.lambda_max;

    // q_{-1} = 0 seeds the recurrence so that p_j = 1 - x q_{j-1} holds for
    // every j >= 0 against the p_eval recurrences above.
    double q_prev = 0.0;
    double q;
    if (spec.family == PolyFamily::HeavyBall) {
        const double sl = std::sqrt(lmax), sm = std::sqrt(lmin);
        const double alpha = 4.0 / ((sl + sm) * (sl + sm));
        const double beta = ((sl - sm) / (sl + sm)) * ((sl - sm) / (sl + sm));
        q = 0.5 / lmax + 0.5 / lmin;  // q0
        for (int j = 0; j < k; ++j) {
            const double q_next = q + alpha * (1.0 - x * q) + beta * (q - q_prev);
            q_prev = q;
            q = q_next;
        }
    } else {
        const double sl = std::sqrt(lmax), sm = std::sqrt(lmin);
        const double beta = (sl - sm) / (sl + sm);
        const double L = lmax;
        q = 1.0 / L;  // q0
        for (int j = 0; j < k; ++j) {
            const double q_next = q + (1.0 - x * q) / L + beta * (1.0 - x / L) * (q - q_prev);
            q_prev = q;
            q = q_next;
        }
    }
    return q;
}

std::vector<std::pair<double, double>> curve_data(const PolynomialSpec& spec,
                                                  const std::vector<double>& grid) {
    spec.validate();
    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    for (double x : grid) out.emplace_back(x, p_eval(spec, x));
    return out;
}

double hb_bound(double kappa, int k) {
    if (kappa < 1.0) throw std::invalid_argument("hb_bound: kappa must be >= 1");
    if (k < 1) throw std::invalid_argument("hb_bound: k must be >= 1");
    const double sk = std::sqrt(kappa);
    return 0.5 * (kappa - 1.0) * std::pow((sk - 1.0) / (sk + 1.0), k - 1);
}

double na_bound(double kappa, int k) {
    if (kappa < 1.0) throw std::invalid_argument("na_bound: kappa must be >= 1");
    if (k < 1) throw std::invalid_argument("na_bound: k must be >= 1");
    return 2.0 * std::pow(1.0 - 1.0 / std::sqrt(kappa), k);
}

namespace {

// Amplification factor s of the k-step inner solve when the preconditioned
// spectrum lies in [1-delta, 1]; the cycle condition reads
// (1-delta)/(1-s) <= 1 - delta_TG.
double threshold_s(ThresholdFamily family, int k, double delta) {
    const double u = std::sqrt(1.0 - delta);
    if (family == ThresholdFamily::H)
        return delta * std::pow(1.0 - u, k - 1) /
               (2.0 * (1.0 - delta) * std::pow(1.0 + u, k - 1));
    return std::sqrt(2.0) * std::pow(1.0 - u, k);
}

double threshold_objective(ThresholdFamily family, int k, double delta) {
    const double s = threshold_s(family, k, delta);
    if (s >= 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 - delta) / (1.0 - s);
}

} // namespace

bool threshold_admissible(ThresholdFamily family, int k, double delta) {
    if (delta < 0.0 || delta >= 1.0) return false;
    return threshold_s(family, k, delta) < 1.0;
}

ThresholdResult solve_threshold(ThresholdFamily family, int k) {
    if (k < 2) throw std::invalid_argument("solve_threshold: k must be >= 2");

    // Bracket the minimum on a dense grid, then golden-section to 1e-12.
    const int n_scan = 4096;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= n_scan; ++i) {
        const double d = static_cast<double>(i) / (n_scan + 1);
        const double f = threshold_objective(family, k, d);
        if (f < best) {
            best = f;
            best_i = i;
        }
    }
    if (!std::isfinite(best)) throw std::invalid_argument("solve_threshold: no admissible delta");

    double lo = std::max(0.0, (best_i - 1.0) / (n_scan + 1));
    double hi = std::min(1.0 - 1e-16, (best_i + 1.0) / (n_scan + 1));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = threshold_objective(family, k, x1);
    double f2 = threshold_objective(family, k, x2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = threshold_objective(family, k, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = threshold_objective(family, k, x2);
        }
    }
    ThresholdResult res;
    res.k = k;
    res.delta = 0.5 * (lo + hi);
    res.delta_TG = 1.0 - threshold_objective(family, k, res.delta);
    return res;
}

} // namespace mamg
