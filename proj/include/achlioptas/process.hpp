#pragma once

#include "achlioptas/rng.hpp"
#include "achlioptas/strategy.hpp"
#include "achlioptas/union_find.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace achlioptas {

/// How candidate edges are drawn each round.
///
/// UniformPair: each candidate is a uniform unordered pair of distinct
/// vertices; repeats of existing edges are allowed (and counted as redundant
/// when chosen). This is the model behind the round-probability analysis.
///
/// NonEdge: candidates are additionally rejected while they coincide with an
/// edge already in the graph, which requires keeping a hash set of chosen
/// edges. The two modes agree on all tracked fractions up to o(1).
enum class SamplingMode { UniformPair, NonEdge };

const char* to_string(SamplingMode mode);
SamplingMode sampling_mode_from_string(std::string_view name);

struct ProcessConfig {
    std::uint32_t n = 0;
    double t_max = 1.0;                ///< run length in units of n steps, in (0, 1]
    SamplingMode sampling_mode = SamplingMode::UniformPair;
    std::uint64_t seed = 0;
    double sample_interval = 0.001;    ///< trajectory point every ceil(interval*n) steps
    bool track_component_edges = true; ///< per-component edge counters for density audits

    /// Throws std::invalid_argument when any invariant is violated.
    void validate() const;
};

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
};

/// One round: two candidate edges plus the four endpoint component sizes,
/// taken before either edge is added.
struct Round {
    Edge first;
    Edge second;
    RoundSizes sizes;
};

struct StepOutcome {
    Choice choice;
    Edge edge_added;
    bool was_redundant;
};

struct TrajectorySample {
    double t;                     ///< steps / n
    double isolated_fraction;
    double max_fraction;
    std::uint64_t redundant_added;
    std::uint64_t steps;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
};

/// The process engine. Each step draws two candidate edges, asks the strategy
/// which to keep, and adds exactly one edge to the forest; the discarded edge
/// leaves no trace. A trajectory sample is recorded every ceil(interval*n)
/// steps (plus the initial state). Deterministic given the config.
class AchlioptasProcess {
  public:
    explicit AchlioptasProcess(const ProcessConfig& config);

    /// Draws the two candidate edges of the next round. Advances the RNG.
    /// Throws std::runtime_error if rejection sampling exceeds 10^4 retries
    /// (NonEdge mode on a pathologically dense graph).
    Round sample_round();

    StepOutcome step(const Strategy& strategy);

    /// Steps until floor(t*n) steps have been taken. Requires t in (0, 1].
    void run_to(double t, const Strategy& strategy);

    /// Appends the current state to the trajectory unless the last sample is
    /// already at the current step.
    void finish_trajectory();

    const ProcessConfig& config() const { return config_; }
    const Trajectory& trajectory() const { return trajectory_; }
    ComponentForest& forest() { return forest_; }
    const ComponentForest& forest() const { return forest_; }

    std::uint64_t steps() const { return steps_; }
    std::uint64_t redundant_added() const { return redundant_; }
    double time() const { return static_cast<double>(steps_) / config_.n; }

    /// Internal edge count per component, keyed by the current representative.
    /// Throws std::logic_error when edge tracking is disabled.
    std::unordered_map<Vertex, std::uint64_t> component_edge_counts();

  private:
    Edge sample_candidate_edge();
    void record_sample();
    static std::uint64_t edge_key(Edge e) {
        return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    }

    ProcessConfig config_;
    ComponentForest forest_;
    SplitMix64 rng_;
    std::uint64_t steps_ = 0;
    std::uint64_t redundant_ = 0;
    std::uint64_t record_every_;
    Trajectory trajectory_;
    std::vector<std::uint32_t> component_edges_; // indexed by root, when tracking
    std::unordered_set<std::uint64_t> edge_set_; // NonEdge mode only
};

/// Executes floor(t_max*n) steps and returns the recorded trajectory
/// (including the final state). Fully deterministic given (config, strategy).
Trajectory run(const ProcessConfig& config, const Strategy& strategy);

/// Smallest recorded t whose max-component fraction reaches `threshold`.
/// Requires threshold in (0, 1).
std::optional<double> emergence_time(const Trajectory& trajectory, double threshold);

/// CSV "t,isolated_fraction,max_fraction,redundant_added,steps", floating
/// values with 10 significant digits.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);
Trajectory read_trajectory_csv(std::istream& in);

} // namespace achlioptas
