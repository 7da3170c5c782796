// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: assemble the model problems, run single solves or the
// full benchmark suite, and dump the polynomial curves and theory thresholds.

#include "mamg/bench.hpp"
#include "mamg/matrix_market.hpp"
#include "mamg/poly.hpp"
#include "mamg/vector_ops.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"momentum-accelerated multigrid solver benchmark"};
    app.require_subcommand(1);

    // --- assemble ---------------------------------------------------------
    std::string as_example = "poisson";
    int as_m = 64;
    std::string as_matrix, as_rhs, as_solution;
    auto* as = app.add_subcommand("assemble", "assemble a model problem and dump the system");
    as->add_option("--example", as_example, "poisson|jump|aniso")->capture_default_str();
    as->add_option("--m", as_m, "mesh parameter (h = 1/m)")->capture_default_str();
    as->add_option("--out-matrix", as_matrix, "Matrix Market output path")->required();
    as->add_option("--out-rhs", as_rhs, "right-hand side output path");
    as->add_option("--out-solution", as_solution, "true solution output path");

    // --- solve ------------------------------------------------------------
    std::string so_example = "poisson";
    int so_m = 64;
    std::string so_cycle = "n:k=2:lmin=0";
    std::string so_matrix, so_rhs;
    double so_theta = 0.08;
    int so_coarsest = 100, so_max_levels = 20, so_max_iters = 999;
    double so_tol = 1e-12;
    std::uint64_t so_seed = 1234;
    std::string so_dump_hierarchy, so_out_solution;
    bool so_history = false;
    auto* so = app.add_subcommand("solve", "run one cycle configuration as a stationary solver");
    so->add_option("--example", so_example, "poisson|jump|aniso")->capture_default_str();
    so->add_option("--m", so_m, "mesh parameter")->capture_default_str();
    so->add_option("--matrix", so_matrix, "solve an external Matrix Market system instead");
    so->add_option("--rhs", so_rhs, "right-hand side file for --matrix");
    so->add_option("--cycle", so_cycle, "cycle spec, e.g. tg, kv:k=1, amli:k=2:estimate, n:k=2:lmin=0")
        ->capture_default_str();
    so->add_option("--theta", so_theta, "aggregation strength threshold")->capture_default_str();
    so->add_option("--coarsest-size", so_coarsest, "direct-solve size")->capture_default_str();
    so->add_option("--max-levels", so_max_levels, "maximum level count")->capture_default_str();
    so->add_option("--tol", so_tol, "relative residual tolerance")->capture_default_str();
    so->add_option("--max-iters", so_max_iters, "iteration cap")->capture_default_str();
    so->add_option("--seed", so_seed, "seed for spectral estimation")->capture_default_str();
    so->add_option("--dump-hierarchy", so_dump_hierarchy, "write level summary CSV here");
    so->add_option("--out-solution", so_out_solution, "write the final iterate here");
    so->add_flag("--print-history", so_history, "print the relative residual history");

    // --- bench ------------------------------------------------------------
    std::string be_config, be_examples, be_ms, be_cycles, be_format = "csv", be_out;
    double be_theta = -1.0, be_tol = -1.0;
    int be_max_iters = -1, be_jobs = -1;
    std::uint64_t be_seed = 0;
    bool be_seed_set = false;
    auto* be = app.add_subcommand("bench", "run a full benchmark suite");
    be->add_option("--config", be_config, "key = value config file");
    be->add_option("--examples", be_examples, "comma list: poisson,jump,aniso");
    be->add_option("--m", be_ms, "comma list of mesh parameters");
    be->add_option("--cycles", be_cycles, "comma list of cycle specs");
    be->add_option("--format", be_format, "csv|markdown")->capture_default_str();
    be->add_option("--out", be_out, "output path (default stdout)");
    be->add_option("--theta", be_theta, "aggregation strength threshold");
    be->add_option("--tol", be_tol, "relative residual tolerance");
    be->add_option("--max-iters", be_max_iters, "iteration cap");
    be->add_option("--jobs", be_jobs, "parallel configurations (0 = all cores)");
    be->add_option("--seed", be_seed, "seed for spectral estimation")
        ->each([&](const std::string&) { be_seed_set = true; });

    // --- poly -------------------------------------------------------------
    int po_k = 3;
    double po_lmin = 0.1, po_lmax = 1.0, po_step = 0.005;
    std::string po_out;
    auto* po = app.add_subcommand("poly", "emit error-polynomial curves as CSV");
    po->add_option("--k", po_k, "polynomial degree")->capture_default_str();
    po->add_option("--lmin", po_lmin, "interval lower bound")->capture_default_str();
    po->add_option("--lmax", po_lmax, "interval upper bound")->capture_default_str();
    po->add_option("--step", po_step, "grid step on [0, lmax]")->capture_default_str();
    po->add_option("--out", po_out, "output path (default stdout)");

    // --- theory -----------------------------------------------------------
    int th_kmax = 7;
    auto* th = app.add_subcommand("theory", "print uniform-convergence thresholds");
    th->add_option("--k-max", th_kmax, "largest inner-step count")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*as) {
            mamg::ProblemSpec ps;
            ps.example = mamg::parse_example(as_example);
            ps.m = as_m;
            const mamg::SparseMatrix A = mamg::assemble(ps);
            mamg::write_matrix_market_file(as_matrix, A);
            const mamg::DenseVector x = mamg::true_solution(A.n_rows);
            if (!as_solution.empty()) mamg::write_vector_file(as_solution, x);
            if (!as_rhs.empty()) mamg::write_vector_file(as_rhs, mamg::rhs_for(A, x));
            std::cout << "wrote " << as_matrix << " (" << A.n_rows << " unknowns, " << A.nnz()
                      << " nonzeros)\n";
        } else if (*so) {
            mamg::SparseMatrix A;
            mamg::DenseVector b;
            if (!so_matrix.empty()) {
                A = mamg::read_matrix_market_file(so_matrix);
                b = so_rhs.empty() ? mamg::rhs_for(A, mamg::true_solution(A.n_rows))
                                   : mamg::read_vector_file(so_rhs);
            } else {
                mamg::ProblemSpec ps;
                ps.example = mamg::parse_example(so_example);
                ps.m = so_m;
                A = mamg::assemble(ps);
                b = mamg::rhs_for(A, mamg::true_solution(A.n_rows));
            }
            mamg::HierarchyOptions opts;
            opts.theta = so_theta;
            opts.coarsest_size = so_coarsest;
            opts.max_levels = so_max_levels;
            const mamg::Hierarchy H = mamg::build_hierarchy(A, opts);
            if (!so_dump_hierarchy.empty()) write_text(so_dump_hierarchy, H.summary_csv());

            const mamg::CycleSpec spec = mamg::parse_cycle_spec(so_cycle);
            const mamg::MultigridPreconditioner B(H, spec, so_seed);
            if (spec.bound_policy == mamg::BoundsPolicy::EstimatePerLevel) {
                std::cout << "estimated bounds per level:\n";
                for (int l = 1; l + 1 < H.num_levels(); ++l)
                    std::cout << "  level " << l << ": [" << B.level_bounds(l).lambda_min << ", "
                              << B.level_bounds(l).lambda_max << "]\n";
            }
            mamg::PrecondFn fn = [&B](const mamg::DenseVector& r) { return B.apply(r); };
            mamg::DenseVector x;
            const mamg::SolveReport rep = mamg::stationary_solve(A, fn, b, so_tol, so_max_iters, &x);
            const char* status = rep.status == mamg::SolveStatus::Converged ? "converged"
                                 : rep.status == mamg::SolveStatus::Diverged ? "diverged"
                                                                             : "max-iterations";
            std::printf("%s m=%d cycle=%s levels=%d: %s, %d iterations, factor %.6f\n",
                        so_matrix.empty() ? so_example.c_str() : so_matrix.c_str(), so_m,
                        so_cycle.c_str(), H.num_levels(), status, rep.iterations, rep.avg_factor);
            if (so_history)
                for (std::size_t i = 0; i < rep.residual_history.size(); ++i)
                    std::printf("  %3zu %.6e\n", i, rep.residual_history[i]);
            if (!so_out_solution.empty()) mamg::write_vector_file(so_out_solution, x);
        } else if (*be) {
            mamg::ExperimentConfig config;
            if (!be_config.empty()) config = mamg::parse_config_file(be_config);
            if (!be_examples.empty()) mamg::apply_config_line(config, "examples", be_examples);
            if (!be_ms.empty()) mamg::apply_config_line(config, "m", be_ms);
            if (!be_cycles.empty()) mamg::apply_config_line(config, "cycles", be_cycles);
            if (be_theta >= 0.0) config.theta = be_theta;
            if (be_tol > 0.0) config.tol = be_tol;
            if (be_max_iters > 0) config.max_iters = be_max_iters;
            if (be_jobs >= 0) config.jobs = be_jobs;
            if (be_seed_set) config.seed = be_seed;
            if (config.cycles.empty() && be_config.empty() && be_cycles.empty()) {
                // Paper-protocol default: every cycle family at its table settings.
                for (const char* s :
                     {"tg", "kv:k=1", "kv:k=2", "kv:k=3", "k:k=2", "k:k=3", "amli:k=2:estimate",
                      "amli:k=3:estimate", "amli:k=2:lmin=0", "amli:k=3:lmin=0",
                      "h:k=2:estimate", "h:k=3:estimate", "h:k=2:lmin=0.1", "h:k=3:lmin=0.1",
                      "h:k=2:lmin=0", "h:k=3:lmin=0", "n:k=2:estimate", "n:k=3:estimate",
                      "n:k=2:lmin=0", "n:k=3:lmin=0"})
                    config.cycles.push_back(mamg::parse_cycle_spec(s));
            }
            const std::vector<mamg::ResultRow> rows = mamg::run_suite(config);
            if (be_format == "csv")
                write_text(be_out, mamg::emit_csv(rows));
            else if (be_format == "markdown")
                write_text(be_out, mamg::emit_markdown(rows));
            else
                throw std::invalid_argument("unknown format '" + be_format + "'");
        } else if (*po) {
            std::ostringstream os;
            os << "x,p_cheb,p_hb,p_na\n";
            const bool hb_defined = po_lmin > 0.0;
            mamg::SpectralBounds bounds{po_lmin, po_lmax};
            for (double x = 0.0; x <= po_lmax + 1e-12; x += po_step) {
                os << x << ",";
                os << mamg::p_eval({mamg::PolyFamily::Chebyshev, po_k, bounds}, x) << ",";
                if (hb_defined) os << mamg::p_eval({mamg::PolyFamily::HeavyBall, po_k, bounds}, x);
                os << "," << mamg::p_eval({mamg::PolyFamily::Nesterov, po_k, bounds}, x) << "\n";
            }
            write_text(po_out, os.str());
        } else if (*th) {
            std::printf("family  k   delta      delta_TG\n");
            for (int k = 2; k <= th_kmax; ++k) {
                const auto h = mamg::solve_threshold(mamg::ThresholdFamily::H, k);
                std::printf("H       %-3d %.6f   %.6f\n", k, h.delta, h.delta_TG);
            }
            for (int k = 2; k <= th_kmax; ++k) {
                const auto n = mamg::solve_threshold(mamg::ThresholdFamily::N, k);
                std::printf("N       %-3d %.6f   %.6f\n", k, n.delta, n.delta_TG);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
