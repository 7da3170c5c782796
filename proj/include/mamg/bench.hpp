// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_BENCH_HPP
#define MAMG_BENCH_HPP

#include "mamg/cycles.hpp"
#include "mamg/hierarchy.hpp"
#include "mamg/model_problems.hpp"
#include "mamg/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mamg {

/// Parses a cycle description such as "tg", "kv:k=1", "n:k=2:lmin=0",
/// "h:k=3:lmin=0.1", "amli:k=2:estimate". Defaults: k=2, fixed bounds
/// (lmin=0, lmax=1).
CycleSpec parse_cycle_spec(const std::string& text);
std::string cycle_spec_string(const CycleSpec& spec);
std::string bounds_string(const CycleSpec& spec);

/// One benchmark campaign: every (example, m, cycle) combination is assembled,
/// set up, and solved by the stationary outer iteration.
struct ExperimentConfig {
    std::vector<Example> examples{Example::Poisson};
    std::vector<int> ms{64, 128, 256, 512};
    std::vector<CycleSpec> cycles;
    double tol = 1e-12;
    int max_iters = 999;
    double theta = 0.08;
    index_t coarsest_size = 100;
    int max_levels = 20;
    std::uint64_t seed = 1234;
    int jobs = 0;  // 0 = hardware concurrency

    void validate() const;
};

enum class RowStatus { Converged, MaxIterations, Diverged, SetupFailed };

struct ResultRow {
    Example example = Example::Poisson;
    int m = 0;
    CycleSpec cycle;
    int iterations = 0;
    double avg_factor = 0.0;
    RowStatus status = RowStatus::Converged;
    std::string error;  // diagnostic when status == SetupFailed
};

/// Runs every combination; rows come back in deterministic (example, m,
/// cycle) order. Hierarchies are built once per (example, m) and shared;
/// individual failures are recorded in the row, never aborting the suite.
std::vector<ResultRow> run_suite(const ExperimentConfig& config);

/// csv columns: example,m,cycle,k,bounds,iters,factor,status
std::string emit_csv(const std::vector<ResultRow>& rows);

/// One table per example, cycles as rows and mesh sizes as columns, cells
/// "factor (iters)" with "-" marking divergence.
std::string emit_markdown(const std::vector<ResultRow>& rows);

/// Flat key=value config file ('#' comments). Keys: examples, m, cycles,
/// tol, max_iters, theta, coarsest_size, max_levels, seed, jobs.
ExperimentConfig parse_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& config, const std::string& key, const std::string& value);

} // namespace mamg

#endif // MAMG_BENCH_HPP
