#include "achlioptas/process.hpp"

#include "achlioptas/format.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace achlioptas {

namespace {

constexpr int kMaxSampleRetries = 10000;

std::uint64_t target_steps(double t, std::uint32_t n) {
    // t*n is conceptually an integer count; guard against the product
    // rounding just below it
    return static_cast<std::uint64_t>(std::floor(t * static_cast<double>(n) + 1e-6));
}

Vertex checked_vertex_count(const ProcessConfig& config) {
    config.validate();
    return config.n;
}

} // namespace

const char* to_string(SamplingMode mode) {
    return mode == SamplingMode::UniformPair ? "uniform-pair" : "non-edge";
}

SamplingMode sampling_mode_from_string(std::string_view name) {
    if (name == "uniform-pair") {
        return SamplingMode::UniformPair;
    }
    if (name == "non-edge") {
        return SamplingMode::NonEdge;
    }
    throw std::invalid_argument("unknown sampling mode '" + std::string(name) +
                                "' (expected uniform-pair | non-edge)");
}

void ProcessConfig::validate() const {
    if (n < 2) {
        throw std::invalid_argument("ProcessConfig: n must be >= 2");
    }
    if (!(t_max > 0.0) || t_max > 1.0) {
        throw std::invalid_argument("ProcessConfig: t_max must lie in (0, 1]");
    }
    if (!(sample_interval > 0.0)) {
        throw std::invalid_argument("ProcessConfig: sample_interval must be positive");
    }
}

AchlioptasProcess::AchlioptasProcess(const ProcessConfig& config)
    : config_(config), forest_(checked_vertex_count(config)), rng_(config.seed) {
    record_every_ = static_cast<std::uint64_t>(
        std::ceil(config_.sample_interval * static_cast<double>(config_.n)));
    if (record_every_ == 0) {
        record_every_ = 1;
    }
    if (config_.track_component_edges) {
        component_edges_.assign(config_.n, 0);
    }
    if (config_.sampling_mode == SamplingMode::NonEdge) {
        edge_set_.reserve(2 * static_cast<std::size_t>(config_.n));
    }
    record_sample(); // initial state at t = 0
}

Edge AchlioptasProcess::sample_candidate_edge() {
    const std::uint64_t n = config_.n;
    for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
        auto u = static_cast<Vertex>(rng_.uniform_below(n));
        auto v = static_cast<Vertex>(rng_.uniform_below(n));
        if (u == v) {
            continue; // no self-loops
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (config_.sampling_mode == SamplingMode::NonEdge && edge_set_.contains(edge_key({u, v}))) {
            continue;
        }
        return {u, v};
    }
    throw std::runtime_error("sample_candidate_edge: retry bound exceeded, graph too dense for non-edge sampling");
}

Round AchlioptasProcess::sample_round() {
    Round round;
    round.first = sample_candidate_edge();
    round.second = sample_candidate_edge();
    round.sizes = {forest_.component_size(round.first.u), forest_.component_size(round.first.v),
                   forest_.component_size(round.second.u), forest_.component_size(round.second.v)};
    return round;
}

StepOutcome AchlioptasProcess::step(const Strategy& strategy) {
    const Round round = sample_round();
    const Choice choice = strategy.decide(round.sizes);
    const Edge chosen = choice == Choice::First ? round.first : round.second;

    Vertex root_u = 0;
    Vertex root_v = 0;
    if (config_.track_component_edges) {
        root_u = forest_.representative(chosen.u);
        root_v = forest_.representative(chosen.v);
    }
    const EdgeOutcome outcome = forest_.add_edge(chosen.u, chosen.v);
    if (!outcome.merged) {
        ++redundant_;
        if (config_.track_component_edges) {
            ++component_edges_[outcome.root];
        }
    } else if (config_.track_component_edges) {
        const Vertex absorbed = outcome.root == root_u ? root_v : root_u;
        component_edges_[outcome.root] += component_edges_[absorbed] + 1;
    }
    if (config_.sampling_mode == SamplingMode::NonEdge) {
        edge_set_.insert(edge_key(chosen));
    }
    ++steps_;
    if (steps_ % record_every_ == 0) {
        record_sample();
    }
    return {choice, chosen, !outcome.merged};
}

void AchlioptasProcess::run_to(double t, const Strategy& strategy) {
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("run_to: t must lie in (0, 1]");
    }
    const std::uint64_t target = target_steps(t, config_.n);
    while (steps_ < target) {
        step(strategy);
    }
}

void AchlioptasProcess::record_sample() {
    const auto n = static_cast<double>(config_.n);
    trajectory_.samples.push_back({static_cast<double>(steps_) / n,
                                   static_cast<double>(forest_.isolated_count()) / n,
                                   static_cast<double>(forest_.max_size()) / n,
                                   redundant_, steps_});
}

void AchlioptasProcess::finish_trajectory() {
    if (trajectory_.samples.back().steps != steps_) {
        record_sample();
    }
}

std::unordered_map<Vertex, std::uint64_t> AchlioptasProcess::component_edge_counts() {
    if (!config_.track_component_edges) {
        throw std::logic_error("component_edge_counts: edge tracking disabled in this run");
    }
    std::unordered_map<Vertex, std::uint64_t> counts;
    counts.reserve(forest_.component_count());
    for (Vertex v = 0; v < config_.n; ++v) {
        if (forest_.representative(v) == v) {
            counts.emplace(v, component_edges_[v]);
        }
    }
    return counts;
}

Trajectory run(const ProcessConfig& config, const Strategy& strategy) {
    AchlioptasProcess process(config);
    process.run_to(config.t_max, strategy);
    process.finish_trajectory();
    return process.trajectory();
}

std::optional<double> emergence_time(const Trajectory& trajectory, double threshold) {
    if (!(threshold > 0.0) || threshold >= 1.0) {
        throw std::invalid_argument("emergence_time: threshold must lie in (0, 1)");
    }
    for (const TrajectorySample& s : trajectory.samples) {
        if (s.max_fraction >= threshold) {
            return s.t;
        }
    }
    return std::nullopt;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
    out << "t,isolated_fraction,max_fraction,redundant_added,steps\n";
    for (const TrajectorySample& s : trajectory.samples) {
        out << format_g10(s.t) << ',' << format_g10(s.isolated_fraction) << ','
            << format_g10(s.max_fraction) << ',' << s.redundant_added << ',' << s.steps << '\n';
    }
}

Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "t,isolated_fraction,max_fraction,redundant_added,steps") {
        throw std::runtime_error("read_trajectory_csv: bad or missing header");
    }
    Trajectory trajectory;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        TrajectorySample s{};
        std::istringstream row(line);
        char comma = 0;
        if (!(row >> s.t >> comma >> s.isolated_fraction >> comma >> s.max_fraction >> comma >>
              s.redundant_added >> comma >> s.steps)) {
            throw std::runtime_error("read_trajectory_csv: malformed row '" + line + "'");
        }
        trajectory.samples.push_back(s);
    }
    return trajectory;
}

} // namespace achlioptas
