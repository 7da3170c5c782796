// SPDX-License-Identifier: Apache-2.0

#include "mamg/model_problems.hpp"

#include <array>
#include <cmath>

namespace mamg {

Example parse_example(const std::string& name) {
    if (name == "poisson") return Example::Poisson;
    if (name == "jump") return Example::JumpDiffusion;
    if (name == "aniso") return Example::Anisotropic;
    throw std::invalid_argument("unknown example '" + name + "' (expected poisson|jump|aniso)");
}

std::string example_name(Example e) {
    switch (e) {
        case Example::Poisson: return "poisson";
        case Example::JumpDiffusion: return "jump";
        case Example::Anisotropic: return "aniso";
    }
    return "?";
}

namespace {

// Element stiffness of a linear basis on the right triangle with legs h and
// constant diffusion tensor diag(kx, ky). Vertices in local order:
// right-angle corner, x-leg end, y-leg end. Gradients are h-independent up to
// 1/h and the area contributes h²/2, so h cancels.
std::array<std::array<double, 3>, 3> element_stiffness(double kx, double ky) {
    // grad phi0 = (-1,-1)/h, grad phi1 = (1,0)/h, grad phi2 = (0,1)/h
    const double g[3][2] = {{-1.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};
    std::array<std::array<double, 3>, 3> K{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            K[a][b] = 0.5 * (kx * g[a][0] * g[b][0] + ky * g[a][1] * g[b][1]);
    return K;
}

bool in_unit_regions(double x, double y) {
    // Closed regions: points on the edges count as inside.
    const bool r1 = (x >= 0.25 && x <= 0.5 && y >= 0.25 && y <= 0.5);
    const bool r2 = (x >= 0.5 && x <= 0.75 && y >= 0.5 && y <= 0.75);
    return r1 || r2;
}

} // namespace

SparseMatrix assemble(const ProblemSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("assemble: mesh parameter m must be >= 2");
    const int m = spec.m;
    const double h = 1.0 / m;
    const index_t nin = m - 1;

    // Interior node (ix, iy), 1 <= ix, iy <= m-1, id row-major in x.
    auto dof = [&](int ix, int iy) -> index_t {
        if (ix <= 0 || ix >= m || iy <= 0 || iy >= m) return -1;  // boundary, eliminated
        return static_cast<index_t>(iy - 1) * nin + static_cast<index_t>(ix - 1);
    };

    std::vector<std::tuple<index_t, index_t, double>> trip;
    trip.reserve(static_cast<std::size_t>(m) * m * 9);

    for (int cy = 0; cy < m; ++cy) {
        for (int cx = 0; cx < m; ++cx) {
            // Square [cx,cx+1]x[cy,cy+1]*h split along the NW-SE diagonal into
            // two right triangles.
            // T1: (cx,cy), (cx+1,cy), (cx,cy+1); T2: (cx+1,cy+1), (cx,cy+1), (cx+1,cy)
            const int t1[3][2] = {{cx, cy}, {cx + 1, cy}, {cx, cy + 1}};
            const int t2[3][2] = {{cx + 1, cy + 1}, {cx, cy + 1}, {cx + 1, cy}};
            for (const auto& tri : {t1, t2}) {
                double kx = 1.0, ky = 1.0;
                if (spec.example == Example::Anisotropic) {
                    ky = spec.anisotropy_eps;
                } else if (spec.example == Example::JumpDiffusion) {
                    const double gx = (tri[0][0] + tri[1][0] + tri[2][0]) / 3.0 * h;
                    const double gy = (tri[0][1] + tri[1][1] + tri[2][1]) / 3.0 * h;
                    const double a = in_unit_regions(gx, gy) ? 1.0 : spec.jump_low;
                    kx = ky = a;
                }
                const auto K = element_stiffness(kx, ky);
                index_t ids[3];
                for (int a = 0; a < 3; ++a) ids[a] = dof(tri[a][0], tri[a][1]);
                for (int a = 0; a < 3; ++a) {
                    if (ids[a] < 0) continue;
                    for (int b = 0; b < 3; ++b) {
                        if (ids[b] < 0) continue;
                        trip.emplace_back(ids[a], ids[b], K[a][b]);
                    }
                }
            }
        }
    }
    return SparseMatrix::from_triplets(nin * nin, nin * nin, std::move(trip), true);
}

DenseVector true_solution(index_t n) {
    if (n < 1) throw std::invalid_argument("true_solution: N must be >= 1");
    DenseVector x(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
    return x;
}

DenseVector rhs_for(const SparseMatrix& A, const DenseVector& x_true) {
    return spmv(A, x_true);
}

} // namespace mamg
