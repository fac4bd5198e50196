#pragma once

#include "achlioptas/ode.hpp"
#include "achlioptas/union_find.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace achlioptas {

/// The subset-size bound 2*epsilon*(4*t*e)^(-1-1/epsilon), e being Euler's
/// number. Below delta*n vertices, no vertex set S holds more than
/// (1+epsilon)|S| internal edges whp. Underflows to 0 for very small epsilon;
/// mathematically always positive.
double delta_of(double epsilon, double t);

/// The incapacity inequality (1+epsilon)(1-i_t) >= t. While no linear-size
/// component exists this must hold whp; its failure forces a giant.
bool incapacity_check(double i_t, double t, double epsilon);

struct DensityViolation {
    Vertex root;
    std::uint32_t size;
    std::uint64_t edges;
};

/// Checks every component of size < delta*n against the (1+epsilon)*size edge
/// budget. `edges_per_component` is keyed by component representative (the
/// process engine's side-channel counters); unknown keys are rejected with
/// std::invalid_argument. An empty result means the density event did not
/// occur on components.
std::vector<DensityViolation> component_density_audit(
    ComponentForest& forest,
    const std::unordered_map<Vertex, std::uint64_t>& edges_per_component,
    double epsilon, double delta);

/// Smallest grid time where (1+epsilon)(1-i(t)) < t, or nullopt when the
/// inequality holds on the whole solved range. As epsilon -> 0 this
/// approaches the crossing of i(t) with 1-t.
std::optional<double> critical_time(const OdeSolution& sol, double epsilon);

/// One audited time point of the density argument.
struct DensityReport {
    double epsilon = 0.0;
    double t = 0.0;
    double delta = 0.0;             ///< delta_of(epsilon, t)
    double inequality_lhs = 0.0;    ///< (1+epsilon)(1-i(t))
    bool inequality_holds = false;  ///< inequality_lhs >= t
    double redundant_fraction = 0.0;
    double max_fraction = 0.0;
    std::optional<std::uint64_t> violations; ///< audit result, when a simulation was audited
};

/// JSON object with the report fields; arrays of these form the bound
/// subcommand's output.
std::string density_report_json(const DensityReport& report);
std::string density_reports_json(const std::vector<DensityReport>& reports);

} // namespace achlioptas
