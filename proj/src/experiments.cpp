#include "achlioptas/experiments.hpp"

#include "achlioptas/format.hpp"
#include "achlioptas/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace achlioptas {

BatchResult run_batch(const ProcessConfig& base_config, const Strategy& strategy,
                      std::uint32_t trials, std::uint64_t base_seed,
                      const OdeSolution* reference, unsigned jobs,
                      double emergence_threshold) {
    base_config.validate();
    if (trials == 0) {
        throw std::invalid_argument("run_batch: trials must be >= 1");
    }
    if (!(emergence_threshold > 0.0) || emergence_threshold >= 1.0) {
        throw std::invalid_argument("run_batch: emergence threshold must lie in (0, 1)");
    }
    if (reference != nullptr && reference->t_end() < base_config.t_max) {
        throw std::invalid_argument("run_batch: ODE reference does not cover [0, t_max]");
    }

    BatchResult result;
    result.strategy_name = strategy.name();
    result.n = base_config.n;
    result.trials = trials;
    result.t_max = base_config.t_max;
    result.base_seed = base_seed;
    result.sampling_mode = base_config.sampling_mode;
    result.emergence_threshold = emergence_threshold;
    result.trajectories.resize(trials);

    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min<unsigned>(jobs, trials);

    std::atomic<std::uint32_t> next_trial{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint32_t k = next_trial.fetch_add(1);
            if (k >= trials) {
                return;
            }
            ProcessConfig config = base_config;
            config.seed = derive_seed(base_seed, k);
            result.trajectories[k] = run(config, strategy);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // all trials share the template, hence one step grid
    const std::size_t points = result.trajectories.front().samples.size();
    for (const Trajectory& traj : result.trajectories) {
        if (traj.samples.size() != points) {
            throw std::logic_error("run_batch: trials disagree on the sample grid");
        }
    }

    result.grid_t.resize(points);
    result.mean_isolated.resize(points);
    result.sd_isolated.resize(points);
    result.mean_max.resize(points);
    result.sd_max.resize(points);
    for (std::size_t p = 0; p < points; ++p) {
        result.grid_t[p] = result.trajectories.front().samples[p].t;
        double sum_iso = 0.0;
        double sum_max = 0.0;
        for (std::uint32_t k = 0; k < trials; ++k) {
            sum_iso += result.trajectories[k].samples[p].isolated_fraction;
            sum_max += result.trajectories[k].samples[p].max_fraction;
        }
        const double mean_iso = sum_iso / trials;
        const double mean_max = sum_max / trials;
        double sq_iso = 0.0;
        double sq_max = 0.0;
        for (std::uint32_t k = 0; k < trials; ++k) {
            const double di = result.trajectories[k].samples[p].isolated_fraction - mean_iso;
            const double dm = result.trajectories[k].samples[p].max_fraction - mean_max;
            sq_iso += di * di;
            sq_max += dm * dm;
        }
        result.mean_isolated[p] = mean_iso;
        result.mean_max[p] = mean_max;
        result.sd_isolated[p] = trials > 1 ? std::sqrt(sq_iso / (trials - 1)) : 0.0;
        result.sd_max[p] = trials > 1 ? std::sqrt(sq_max / (trials - 1)) : 0.0;
    }

    if (reference != nullptr) {
        result.ode_reference.resize(points);
        double deviation = 0.0;
        for (std::size_t p = 0; p < points; ++p) {
            result.ode_reference[p] = reference->eval(result.grid_t[p]);
            deviation = std::max(deviation, std::abs(result.mean_isolated[p] - result.ode_reference[p]));
        }
        result.ode_deviation = deviation;
    }

    result.emergence_times.reserve(trials);
    for (const Trajectory& traj : result.trajectories) {
        result.emergence_times.push_back(emergence_time(traj, emergence_threshold));
    }
    return result;
}

EmergenceSummary emergence_summary(const BatchResult& batch, double threshold) {
    if (batch.trajectories.empty()) {
        throw std::invalid_argument("emergence_summary: empty batch");
    }
    EmergenceSummary summary;
    summary.total = static_cast<std::uint32_t>(batch.trajectories.size());
    std::vector<double> times;
    for (const Trajectory& traj : batch.trajectories) {
        if (const auto t = emergence_time(traj, threshold)) {
            times.push_back(*t);
        } else {
            ++summary.censored;
        }
    }
    if (times.empty()) {
        return summary;
    }
    std::sort(times.begin(), times.end());
    summary.min = times.front();
    summary.max = times.back();
    const std::size_t m = times.size();
    summary.median = m % 2 == 1 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]);
    return summary;
}

void write_batch_csv(const BatchResult& batch, std::ostream& out) {
    out << "t,mean_isolated,sd_isolated,mean_max,sd_max,ode_i\n";
    for (std::size_t p = 0; p < batch.grid_t.size(); ++p) {
        out << format_g10(batch.grid_t[p]) << ',' << format_g10(batch.mean_isolated[p]) << ','
            << format_g10(batch.sd_isolated[p]) << ',' << format_g10(batch.mean_max[p]) << ','
            << format_g10(batch.sd_max[p]) << ',';
        if (!batch.ode_reference.empty()) {
            out << format_g10(batch.ode_reference[p]);
        }
        out << '\n';
    }
}

std::string batch_summary_json(const BatchResult& batch) {
    nlohmann::json j;
    j["strategy"] = batch.strategy_name;
    j["n"] = batch.n;
    j["trials"] = batch.trials;
    j["t_max"] = batch.t_max;
    j["base_seed"] = batch.base_seed;
    j["sampling_mode"] = to_string(batch.sampling_mode);
    j["emergence_threshold"] = batch.emergence_threshold;

    nlohmann::json times = nlohmann::json::array();
    for (const auto& t : batch.emergence_times) {
        if (t) {
            times.push_back(*t);
        } else {
            times.push_back(nullptr);
        }
    }
    j["emergence_times"] = std::move(times);

    const EmergenceSummary summary = emergence_summary(batch, batch.emergence_threshold);
    nlohmann::json e;
    e["censored"] = summary.censored;
    e["min"] = summary.min ? nlohmann::json(*summary.min) : nlohmann::json(nullptr);
    e["median"] = summary.median ? nlohmann::json(*summary.median) : nlohmann::json(nullptr);
    e["max"] = summary.max ? nlohmann::json(*summary.max) : nlohmann::json(nullptr);
    j["emergence"] = std::move(e);

    j["ode_deviation"] = batch.ode_deviation ? nlohmann::json(*batch.ode_deviation) : nlohmann::json(nullptr);

    const std::size_t last = batch.grid_t.empty() ? 0 : batch.grid_t.size() - 1;
    if (!batch.grid_t.empty()) {
        nlohmann::json f;
        f["t"] = batch.grid_t[last];
        f["mean_isolated"] = batch.mean_isolated[last];
        f["sd_isolated"] = batch.sd_isolated[last];
        f["mean_max"] = batch.mean_max[last];
        f["sd_max"] = batch.sd_max[last];
        j["final"] = std::move(f);
    }
    return j.dump(2);
}

} // namespace achlioptas
