#pragma once

#include "achlioptas/ode.hpp"
#include "achlioptas/process.hpp"
#include "achlioptas/strategy.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace achlioptas {

/// Aggregated statistics over a batch of independently seeded trials that all
/// share one config template. Trials record on identical step grids, so
/// per-time statistics are taken index-wise, in trial order (bit-reproducible
/// regardless of how many worker threads ran the trials).
struct BatchResult {
    std::string strategy_name;
    std::uint32_t n = 0;
    std::uint32_t trials = 0;
    double t_max = 1.0;
    std::uint64_t base_seed = 0;
    SamplingMode sampling_mode = SamplingMode::UniformPair;
    double emergence_threshold = 0.01;

    std::vector<double> grid_t;
    std::vector<double> mean_isolated;
    std::vector<double> sd_isolated;
    std::vector<double> mean_max;
    std::vector<double> sd_max;
    std::vector<double> ode_reference; ///< i(t) on the grid; empty without a reference
    std::optional<double> ode_deviation; ///< max |mean_isolated - ode_reference|

    std::vector<std::optional<double>> emergence_times; ///< per trial, at emergence_threshold
    std::vector<Trajectory> trajectories; ///< kept in memory for re-thresholding
};

/// Runs `trials` simulations with seeds derived from (base_seed, trial index)
/// and aggregates them. `reference`, when given, must cover [0, t_max] and
/// fills the ODE comparison fields. `jobs` worker threads execute trials
/// (0 = hardware concurrency); results do not depend on the thread count.
BatchResult run_batch(const ProcessConfig& base_config, const Strategy& strategy,
                      std::uint32_t trials, std::uint64_t base_seed,
                      const OdeSolution* reference = nullptr, unsigned jobs = 1,
                      double emergence_threshold = 0.01);

struct EmergenceSummary {
    std::uint32_t total = 0;
    std::uint32_t censored = 0; ///< trials that never reached the threshold
    std::optional<double> min;
    std::optional<double> median;
    std::optional<double> max;
};

/// Order statistics of per-trial emergence times at an arbitrary threshold
/// (recomputed from the stored trajectories). Rejects empty batches.
EmergenceSummary emergence_summary(const BatchResult& batch, double threshold);

/// CSV "t,mean_isolated,sd_isolated,mean_max,sd_max,ode_i", one row per grid
/// point (ode_i empty-cell when the batch had no reference).
void write_batch_csv(const BatchResult& batch, std::ostream& out);

/// JSON summary: identification, emergence statistics at the batch threshold,
/// ODE deviation and final-time statistics.
std::string batch_summary_json(const BatchResult& batch);

} // namespace achlioptas
