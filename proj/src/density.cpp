#include "achlioptas/density.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace achlioptas {

double delta_of(double epsilon, double t) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("delta_of: epsilon must be positive");
    }
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("delta_of: t must lie in (0, 1]");
    }
    return 2.0 * epsilon * std::pow(4.0 * t * M_E, -1.0 - 1.0 / epsilon);
}

bool incapacity_check(double i_t, double t, double epsilon) {
    if (!(i_t >= 0.0 && i_t <= 1.0)) {
        throw std::invalid_argument("incapacity_check: i_t must lie in [0, 1]");
    }
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("incapacity_check: t must lie in (0, 1]");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("incapacity_check: epsilon must be positive");
    }
    return (1.0 + epsilon) * (1.0 - i_t) >= t;
}

std::vector<DensityViolation> component_density_audit(
    ComponentForest& forest,
    const std::unordered_map<Vertex, std::uint64_t>& edges_per_component,
    double epsilon, double delta) {
    if (!(epsilon > 0.0) || !(delta > 0.0)) {
        throw std::invalid_argument("component_density_audit: epsilon and delta must be positive");
    }
    for (const auto& [root, edges] : edges_per_component) {
        if (root >= forest.vertex_count() || forest.representative(root) != root) {
            throw std::invalid_argument("component_density_audit: edge count references an unknown component");
        }
    }
    const double size_cap = delta * static_cast<double>(forest.vertex_count());
    std::vector<DensityViolation> violations;
    for (const auto& [root, edges] : edges_per_component) {
        const std::uint32_t size = forest.component_size(root);
        if (static_cast<double>(size) < size_cap &&
            static_cast<double>(edges) > (1.0 + epsilon) * static_cast<double>(size)) {
            violations.push_back({root, size, edges});
        }
    }
    return violations;
}

std::optional<double> critical_time(const OdeSolution& sol, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("critical_time: epsilon must be positive");
    }
    for (std::size_t k = 0; k < sol.grid_size(); ++k) {
        const double t = sol.grid_t(k);
        if ((1.0 + epsilon) * (1.0 - sol.grid_value(k)) < t) {
            return t;
        }
    }
    return std::nullopt;
}

namespace {

nlohmann::json report_to_json(const DensityReport& r) {
    nlohmann::json j{{"epsilon", r.epsilon},
                     {"t", r.t},
                     {"delta", r.delta},
                     {"inequality_lhs", r.inequality_lhs},
                     {"inequality_holds", r.inequality_holds},
                     {"redundant_fraction", r.redundant_fraction},
                     {"max_fraction", r.max_fraction}};
    if (r.violations) {
        j["violations"] = *r.violations;
    } else {
        j["violations"] = nullptr;
    }
    return j;
}

} // namespace

std::string density_report_json(const DensityReport& report) {
    return report_to_json(report).dump(2);
}

std::string density_reports_json(const std::vector<DensityReport>& reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const DensityReport& r : reports) {
        array.push_back(report_to_json(r));
    }
    return array.dump(2);
}

} // namespace achlioptas
