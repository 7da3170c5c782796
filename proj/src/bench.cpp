// SPDX-License-Identifier: Apache-2.0

#include "mamg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace mamg {

CycleSpec parse_cycle_spec(const std::string& text) {
    CycleSpec spec;
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.empty()) throw std::invalid_argument("empty cycle spec");

    const std::string& kind = parts[0];
    if (kind == "tg") spec.kind = CycleKind::TwoGrid;
    else if (kind == "kv") spec.kind = CycleKind::KV;
    else if (kind == "amli") spec.kind = CycleKind::AMLI;
    else if (kind == "k") spec.kind = CycleKind::K;
    else if (kind == "h") spec.kind = CycleKind::H;
    else if (kind == "n") spec.kind = CycleKind::N;
    else throw std::invalid_argument("unknown cycle kind '" + kind + "' (expected tg|kv|amli|k|h|n)");

    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (p == "estimate") {
            spec.bound_policy = BoundsPolicy::EstimatePerLevel;
        } else if (p == "polyinit") {
            spec.init = InitMode::Polynomial;
        } else if (p.rfind("k=", 0) == 0) {
            spec.k = std::stoi(p.substr(2));
        } else if (p.rfind("lmin=", 0) == 0) {
            spec.fixed.lambda_min = std::stod(p.substr(5));
        } else if (p.rfind("lmax=", 0) == 0) {
            spec.fixed.lambda_max = std::stod(p.substr(5));
        } else {
            throw std::invalid_argument("bad cycle spec token '" + p + "'");
        }
    }
    spec.validate();
    return spec;
}

std::string bounds_string(const CycleSpec& spec) {
    if (spec.kind == CycleKind::TwoGrid || spec.kind == CycleKind::KV || spec.kind == CycleKind::K)
        return "-";
    if (spec.bound_policy == BoundsPolicy::EstimatePerLevel) return "estimate";
    std::ostringstream os;
    os << "fixed(" << spec.fixed.lambda_min << "," << spec.fixed.lambda_max << ")";
    return os.str();
}

std::string cycle_spec_string(const CycleSpec& spec) {
    std::ostringstream os;
    os << cycle_kind_name(spec.kind);
    if (spec.kind != CycleKind::TwoGrid) os << ":k=" << spec.k;
    if (spec.kind == CycleKind::AMLI || spec.kind == CycleKind::H || spec.kind == CycleKind::N) {
        if (spec.bound_policy == BoundsPolicy::EstimatePerLevel)
            os << ":estimate";
        else {
            os << ":lmin=" << spec.fixed.lambda_min;
            if (spec.fixed.lambda_max != 1.0) os << ":lmax=" << spec.fixed.lambda_max;
        }
    }
    return os.str();
}

void ExperimentConfig::validate() const {
    if (examples.empty()) throw std::invalid_argument("config: no examples");
    if (ms.empty()) throw std::invalid_argument("config: no mesh parameters");
    for (int m : ms)
        if (m < 2) throw std::invalid_argument("config: mesh parameter must be >= 2");
    for (const CycleSpec& c : cycles) c.validate();
    if (tol <= 0.0 || tol >= 1.0) throw std::invalid_argument("config: tol must be in (0,1)");
    if (max_iters < 1) throw std::invalid_argument("config: max_iters must be >= 1");
    if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("config: theta must be in [0,1)");
}

std::vector<ResultRow> run_suite(const ExperimentConfig& config) {
    config.validate();
    if (config.cycles.empty()) return {};

    struct Task {
        Example example;
        int m;
        CycleSpec cycle;
        const Hierarchy* hierarchy;
        const SparseMatrix* A;
        const DenseVector* b;
    };

    // Build each (example, m) system and hierarchy once, shared immutably.
    struct System {
        SparseMatrix A;
        DenseVector b;
        Hierarchy hierarchy;
        std::string error;
        bool ok = false;
    };
    std::map<std::pair<int, int>, System> systems;
    for (Example ex : config.examples) {
        for (int m : config.ms) {
            const auto key = std::make_pair(static_cast<int>(ex), m);
            System& sys = systems[key];
            try {
                ProblemSpec ps;
                ps.example = ex;
                ps.m = m;
                sys.A = assemble(ps);
                sys.b = rhs_for(sys.A, true_solution(sys.A.n_rows));
                HierarchyOptions opts;
                opts.theta = config.theta;
                opts.coarsest_size = config.coarsest_size;
                opts.max_levels = config.max_levels;
                sys.hierarchy = build_hierarchy(sys.A, opts);
                sys.ok = true;
            } catch (const std::exception& e) {
                sys.error = e.what();
            }
        }
    }

    std::vector<ResultRow> rows;
    std::vector<Task> tasks;
    for (Example ex : config.examples) {
        for (int m : config.ms) {
            const auto key = std::make_pair(static_cast<int>(ex), m);
            const System& sys = systems[key];
            for (const CycleSpec& c : config.cycles) {
                ResultRow row;
                row.example = ex;
                row.m = m;
                row.cycle = c;
                if (!sys.ok) {
                    row.status = RowStatus::SetupFailed;
                    row.error = sys.error;
                }
                rows.push_back(row);
                tasks.push_back(Task{ex, m, c, &sys.hierarchy, &sys.A, &sys.b});
            }
        }
    }

    auto run_one = [&](std::size_t i) {
        ResultRow& row = rows[i];
        if (row.status == RowStatus::SetupFailed) return;
        const Task& t = tasks[i];
        try {
            MultigridPreconditioner B(*t.hierarchy, t.cycle, config.seed);
            PrecondFn fn = [&B](const DenseVector& r) { return B.apply(r); };
            const SolveReport rep = stationary_solve(*t.A, fn, *t.b, config.tol, config.max_iters);
            row.iterations = rep.iterations;
            row.avg_factor = rep.avg_factor;
            switch (rep.status) {
                case SolveStatus::Converged: row.status = RowStatus::Converged; break;
                case SolveStatus::MaxIterations: row.status = RowStatus::MaxIterations; break;
                case SolveStatus::Diverged: row.status = RowStatus::Diverged; break;
            }
        } catch (const std::exception& e) {
            row.status = RowStatus::SetupFailed;
            row.error = e.what();
        }
    };

    int jobs = config.jobs > 0 ? config.jobs
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        for (std::thread& th : pool) th.join();
    }
    return rows;
}

namespace {

std::string factor_cell(const ResultRow& row) {
    if (row.status == RowStatus::Diverged) return "-";
    if (row.status == RowStatus::SetupFailed) return "err";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f (%d)", row.avg_factor, row.iterations);
    return buf;
}

std::string status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Converged: return "converged";
        case RowStatus::MaxIterations: return "max-iterations";
        case RowStatus::Diverged: return "diverged";
        case RowStatus::SetupFailed: return "setup-failed";
    }
    return "?";
}

} // namespace

std::string emit_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << "example,m,cycle,k,bounds,iters,factor,status\n";
    char buf[32];
    for (const ResultRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f", r.avg_factor);
        os << example_name(r.example) << "," << r.m << "," << cycle_kind_name(r.cycle.kind) << ","
           << (r.cycle.kind == CycleKind::TwoGrid ? 0 : r.cycle.k) << "," << bounds_string(r.cycle)
           << "," << r.iterations << "," << buf << "," << status_name(r.status) << "\n";
    }
    return os.str();
}

std::string emit_markdown(const std::vector<ResultRow>& rows) {
    // Collect the m-columns and the (example, cycle) row groups in first-seen
    // order so output is deterministic.
    std::vector<Example> examples;
    std::vector<int> ms;
    for (const ResultRow& r : rows) {
        if (std::find(examples.begin(), examples.end(), r.example) == examples.end())
            examples.push_back(r.example);
        if (std::find(ms.begin(), ms.end(), r.m) == ms.end()) ms.push_back(r.m);
    }
    std::sort(ms.begin(), ms.end());

    std::ostringstream os;
    for (Example ex : examples) {
        os << "### " << example_name(ex) << "\n\n";
        os << "| cycle |";
        for (int m : ms) os << " h=1/" << m << " |";
        os << "\n|---|";
        for (std::size_t i = 0; i < ms.size(); ++i) os << "---|";
        os << "\n";

        std::vector<std::string> seen;
        for (const ResultRow& r : rows) {
            if (r.example != ex) continue;
            const std::string label = cycle_spec_string(r.cycle);
            if (std::find(seen.begin(), seen.end(), label) != seen.end()) continue;
            seen.push_back(label);
            os << "| " << label << " |";
            for (int m : ms) {
                std::string cell = " ";
                for (const ResultRow& q : rows)
                    if (q.example == ex && q.m == m && cycle_spec_string(q.cycle) == label) {
                        cell = factor_cell(q);
                        break;
                    }
                os << " " << cell << " |";
            }
            os << "\n";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        // trim
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

} // namespace

void apply_config_line(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "examples") {
        config.examples.clear();
        for (const std::string& s : split_list(value)) config.examples.push_back(parse_example(s));
    } else if (key == "m") {
        config.ms.clear();
        for (const std::string& s : split_list(value)) config.ms.push_back(std::stoi(s));
    } else if (key == "cycles") {
        config.cycles.clear();
        for (const std::string& s : split_list(value)) config.cycles.push_back(parse_cycle_spec(s));
    } else if (key == "tol") {
        config.tol = std::stod(value);
    } else if (key == "max_iters") {
        config.max_iters = std::stoi(value);
    } else if (key == "theta") {
        config.theta = std::stod(value);
    } else if (key == "coarsest_size") {
        config.coarsest_size = static_cast<index_t>(std::stoi(value));
    } else if (key == "max_levels") {
        config.max_levels = std::stoi(value);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(std::stoull(value));
    } else if (key == "jobs") {
        config.jobs = std::stoi(value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    ExperimentConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t\r");
            const auto y = s.find_last_not_of(" \t\r");
            return x == std::string::npos ? std::string{} : s.substr(x, y - x + 1);
        };
        apply_config_line(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

} // namespace mamg
