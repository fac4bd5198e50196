// Command-line front end: simulate | ode | bound | batch.
// Exit codes: 0 success, 1 runtime failure, 2 argument error.

#include "achlioptas/density.hpp"
#include "achlioptas/experiments.hpp"
#include "achlioptas/format.hpp"
#include "achlioptas/ode.hpp"
#include "achlioptas/process.hpp"
#include "achlioptas/strategy.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace achlioptas;

std::string default_out_dir() {
    const char* env = std::getenv("ACHLIOPTAS_OUT_DIR");
    return env && *env ? env : ".";
}

std::string resolve_path(const std::string& out_dir, const std::string& explicit_path,
                         const std::string& default_name) {
    if (!explicit_path.empty()) {
        return explicit_path;
    }
    return out_dir + "/" + default_name;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    return out;
}

struct SimulateArgs {
    std::string strategy = "minp1";
    std::uint32_t n = 0;
    double t_max = 1.0;
    std::uint64_t seed = 0;
    double interval = 0.001;
    std::string sampling = "uniform-pair";
    double threshold = 0.01;
    std::string out;
};

int cmd_simulate(const SimulateArgs& args, const std::string& out_dir) {
    const auto strategy = parse_strategy(args.strategy);
    ProcessConfig config;
    config.n = args.n;
    config.t_max = args.t_max;
    config.seed = args.seed;
    config.sample_interval = args.interval;
    config.sampling_mode = sampling_mode_from_string(args.sampling);
    const Trajectory trajectory = run(config, *strategy);

    const std::string path = resolve_path(out_dir, args.out, "trajectory.csv");
    auto out = open_out(path);
    write_trajectory_csv(trajectory, out);

    const TrajectorySample& last = trajectory.samples.back();
    std::cout << "strategy=" << strategy->name() << " n=" << config.n
              << " seed=" << config.seed << " sampling=" << to_string(config.sampling_mode) << '\n';
    std::cout << "final: t=" << format_g10(last.t)
              << " isolated_fraction=" << format_g10(last.isolated_fraction)
              << " max_fraction=" << format_g10(last.max_fraction)
              << " redundant_added=" << last.redundant_added << '\n';
    const auto emergence = emergence_time(trajectory, args.threshold);
    std::cout << "emergence(threshold=" << format_g10(args.threshold)
              << "): " << (emergence ? format_g10(*emergence) : std::string("none")) << '\n';
    std::cout << "trajectory written to " << path << '\n';
    return 0;
}

struct OdeArgs {
    double h = 1e-4;
    double t_end = 1.0;
    double report_at = 0.9455;
    std::size_t stride = 10;
    std::string out;
};

int cmd_ode(const OdeArgs& args, const std::string& out_dir) {
    const OdeSolution sol = solve_isolated_ode(args.h, args.t_end);
    const double value = sol.eval(args.report_at);
    const std::string path = resolve_path(out_dir, args.out, "ode.csv");
    auto out = open_out(path);
    write_ode_csv(sol, out, args.stride);
    std::cout << "i(" << format_g10(args.report_at) << ") = " << format_g10(value) << '\n';
    std::cout << "solution written to " << path << '\n';
    return 0;
}

struct BoundArgs {
    std::vector<double> epsilons;
    double t = 0.9455;
    double h = 1e-4;
    std::string out;
    bool audit = false;
    std::string strategy = "minp1";
    std::uint32_t n = 100000;
    double t_max = 0.9455;
    std::uint64_t seed = 0;
    std::string sampling = "uniform-pair";
    std::vector<double> audit_at{0.5, 0.7, 0.9};
};

int cmd_bound(const BoundArgs& args, const std::string& out_dir) {
    const OdeSolution sol = solve_isolated_ode(args.h, 1.0);
    std::vector<DensityReport> reports;

    for (const double epsilon : args.epsilons) {
        const double delta = delta_of(epsilon, args.t);
        const auto critical = critical_time(sol, epsilon);
        std::cout << "epsilon=" << format_g10(epsilon) << ": delta(epsilon," << format_g10(args.t)
                  << ")=" << format_g10(delta) << ", critical_time=";
        if (critical) {
            std::cout << format_g10(*critical) << '\n';
        } else {
            std::cout << "none (inequality never violated)" << '\n';
        }
        if (!args.audit) {
            DensityReport report;
            report.epsilon = epsilon;
            report.t = args.t;
            report.delta = delta;
            report.inequality_lhs = (1.0 + epsilon) * (1.0 - sol.eval(args.t));
            report.inequality_holds = report.inequality_lhs >= args.t;
            reports.push_back(report);
        }
    }

    if (args.audit) {
        const auto strategy = parse_strategy(args.strategy);
        ProcessConfig config;
        config.n = args.n;
        config.t_max = args.t_max;
        config.seed = args.seed;
        config.sampling_mode = sampling_mode_from_string(args.sampling);
        config.track_component_edges = true;

        std::vector<double> times = args.audit_at;
        std::sort(times.begin(), times.end());
        AchlioptasProcess process(config);
        for (const double at : times) {
            if (!(at > 0.0) || at > config.t_max) {
                throw std::invalid_argument("audit time must lie in (0, t_max]");
            }
            process.run_to(at, *strategy);
            const auto edge_counts = process.component_edge_counts();
            const double t_nominal = process.time();
            const double i_t =
                static_cast<double>(process.forest().isolated_count()) / config.n;
            const double t_effective =
                static_cast<double>(process.steps() - process.redundant_added()) / config.n;
            for (const double epsilon : args.epsilons) {
                const double delta = delta_of(epsilon, t_nominal);
                const auto violations =
                    component_density_audit(process.forest(), edge_counts, epsilon, delta);
                DensityReport report;
                report.epsilon = epsilon;
                report.t = t_nominal;
                report.delta = delta;
                report.inequality_lhs = (1.0 + epsilon) * (1.0 - i_t);
                report.inequality_holds = report.inequality_lhs >= t_nominal;
                report.redundant_fraction =
                    static_cast<double>(process.redundant_added()) / config.n;
                report.max_fraction =
                    static_cast<double>(process.forest().max_size()) / config.n;
                report.violations = violations.size();
                reports.push_back(report);
                std::cout << "audit t=" << format_g10(t_nominal) << " epsilon="
                          << format_g10(epsilon) << ": violations=" << violations.size()
                          << " lhs=" << format_g10(report.inequality_lhs)
                          << " t_effective=" << format_g10(t_effective) << '\n';
            }
        }
    }

    const std::string path = resolve_path(out_dir, args.out, "density.json");
    auto out = open_out(path);
    out << density_reports_json(reports) << '\n';
    std::cout << "density reports written to " << path << '\n';
    return 0;
}

struct BatchArgs {
    std::string strategy = "minp1";
    std::uint32_t n = 0;
    std::uint32_t trials = 10;
    std::uint64_t seed = 0;
    double t_max = 1.0;
    double interval = 0.001;
    double threshold = 0.01;
    std::string sampling = "uniform-pair";
    unsigned jobs = 1;
    double h = 1e-4;
    std::string out_json;
    std::string out_csv;
};

int cmd_batch(const BatchArgs& args, const std::string& out_dir) {
    const auto strategy = parse_strategy(args.strategy);
    ProcessConfig config;
    config.n = args.n;
    config.t_max = args.t_max;
    config.sample_interval = args.interval;
    config.sampling_mode = sampling_mode_from_string(args.sampling);

    const OdeSolution sol = solve_isolated_ode(args.h, 1.0);
    const BatchResult batch =
        run_batch(config, *strategy, args.trials, args.seed, &sol, args.jobs, args.threshold);

    const std::string json_path = resolve_path(out_dir, args.out_json, "batch.json");
    auto json_out = open_out(json_path);
    json_out << batch_summary_json(batch) << '\n';
    const std::string csv_path = resolve_path(out_dir, args.out_csv, "batch_grid.csv");
    auto csv_out = open_out(csv_path);
    write_batch_csv(batch, csv_out);

    const EmergenceSummary summary = emergence_summary(batch, args.threshold);
    std::cout << "strategy=" << batch.strategy_name << " n=" << batch.n
              << " trials=" << batch.trials << '\n';
    std::cout << "mean isolated_fraction at t=" << format_g10(batch.grid_t.back()) << ": "
              << format_g10(batch.mean_isolated.back())
              << " (ode deviation " << format_g10(batch.ode_deviation.value_or(0.0)) << ")\n";
    std::cout << "emergence(threshold=" << format_g10(args.threshold) << "): median=";
    std::cout << (summary.median ? format_g10(*summary.median) : std::string("none"))
              << " censored=" << summary.censored << '\n';
    std::cout << "summary written to " << json_path << ", grid to " << csv_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Achlioptas process simulator: strategies, isolated-vertex ODE and the "
                 "edge-density bound audit"};
    app.require_subcommand(1);
    // --h is an option on two subcommands, so help must not claim the short -h.
    app.set_help_flag("--help", "print help and exit");
    std::string out_dir = default_out_dir();
    app.add_option("--out-dir", out_dir,
                   "directory for default output files (env ACHLIOPTAS_OUT_DIR)");

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run one trial and write its trajectory");
    simulate->add_option("--strategy", sim.strategy, "minp1 | first-edge | bohman-frieze | bounded:K=<k>;w=<list>");
    simulate->add_option("--n", sim.n, "vertex count")->required()->check(CLI::Range(2u, 4000000000u));
    simulate->add_option("--t-max", sim.t_max, "run length in units of n steps");
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--interval", sim.interval, "sampling interval in units of n steps");
    simulate->add_option("--sampling", sim.sampling, "uniform-pair | non-edge");
    simulate->add_option("--threshold", sim.threshold, "giant threshold for the printed emergence time");
    simulate->add_option("--out", sim.out, "trajectory CSV path");

    OdeArgs ode;
    CLI::App* ode_cmd = app.add_subcommand("ode", "integrate the isolated-vertex ODE");
    ode_cmd->set_help_flag("--help", "print help and exit");
    ode_cmd->add_option("--h", ode.h, "RK4 step size, in (0, 0.01]");
    ode_cmd->add_option("--t-end", ode.t_end, "integration end time");
    ode_cmd->add_option("--report-at", ode.report_at, "time whose i(t) is printed");
    ode_cmd->add_option("--stride", ode.stride, "CSV output stride over grid nodes");
    ode_cmd->add_option("--out", ode.out, "solution CSV path");

    BoundArgs bound;
    CLI::App* bound_cmd = app.add_subcommand("bound", "density bound: delta, critical times, optional audit");
    bound_cmd->set_help_flag("--help", "print help and exit");
    bound_cmd->add_option("--epsilon", bound.epsilons, "epsilon values")->required()->expected(-1);
    bound_cmd->add_option("--t", bound.t, "time for the delta and inequality report");
    bound_cmd->add_option("--h", bound.h, "ODE step size");
    bound_cmd->add_option("--out", bound.out, "density report JSON path");
    bound_cmd->add_flag("--audit", bound.audit, "simulate and audit component densities");
    bound_cmd->add_option("--strategy", bound.strategy, "strategy for the audited run");
    bound_cmd->add_option("--n", bound.n, "vertex count for the audited run");
    bound_cmd->add_option("--t-max", bound.t_max, "audited run length");
    bound_cmd->add_option("--seed", bound.seed, "RNG seed for the audited run");
    bound_cmd->add_option("--sampling", bound.sampling, "uniform-pair | non-edge");
    bound_cmd->add_option("--audit-at", bound.audit_at, "times at which to audit")->expected(-1);

    BatchArgs batch;
    CLI::App* batch_cmd = app.add_subcommand("batch", "multi-trial statistics against the ODE");
    batch_cmd->add_option("--strategy", batch.strategy, "strategy spec");
    batch_cmd->add_option("--n", batch.n, "vertex count")->required()->check(CLI::Range(2u, 4000000000u));
    batch_cmd->add_option("--trials", batch.trials, "number of trials")->check(CLI::Range(1u, 1000000u));
    batch_cmd->add_option("--seed", batch.seed, "base seed; trial k uses a derived stream");
    batch_cmd->add_option("--t-max", batch.t_max, "run length in units of n steps");
    batch_cmd->add_option("--interval", batch.interval, "sampling interval");
    batch_cmd->add_option("--threshold", batch.threshold, "giant threshold for emergence times");
    batch_cmd->add_option("--sampling", batch.sampling, "uniform-pair | non-edge");
    batch_cmd->add_option("--jobs", batch.jobs, "worker threads (0 = hardware concurrency)");
    batch_cmd->add_option("--ode-h", batch.h, "step size of the ODE reference");
    batch_cmd->add_option("--out-json", batch.out_json, "summary JSON path");
    batch_cmd->add_option("--out-csv", batch.out_csv, "grid CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim, out_dir);
        }
        if (ode_cmd->parsed()) {
            return cmd_ode(ode, out_dir);
        }
        if (bound_cmd->parsed()) {
            return cmd_bound(bound, out_dir);
        }
        if (batch_cmd->parsed()) {
            return cmd_batch(batch, out_dir);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
