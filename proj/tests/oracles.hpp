// Independent reference implementations used only by the test suites. Each
// one recomputes a library quantity by a different route, so agreement is
// evidence rather than tautology.
#pragma once

#include "achlioptas/strategy.hpp"
#include "achlioptas/union_find.hpp"

#include <cstdint>
#include <unordered_map>

namespace oracles {

/// Forward Euler for i' = -4i + 4i^2 - 4i^3 + 2i^4, i(0) = 1. First-order
/// method, unrelated to the library's RK4 code path; with a fine enough step
/// it brackets the integrator's truncation error.
inline double euler_isolated(double h, double t_end) {
    double i = 1.0;
    double t = 0.0;
    while (t < t_end) {
        double step = h;
        if (t + step > t_end) {
            step = t_end - t;
        }
        i += step * (i * (-4.0 + i * (4.0 + i * (-4.0 + 2.0 * i))));
        t += step;
    }
    return i;
}

/// The greedy isolated-vertex rule restated via the round case table: each
/// candidate edge removes as many isolated vertices as it has isolated
/// endpoints, and ties keep the first edge. Equivalent to comparing weight
/// sums, but derived from the cases rather than from weights.
inline achlioptas::Choice minp1_by_cases(const achlioptas::RoundSizes& r) {
    const int first_isolated = (r.a == 1) + (r.b == 1);
    const int second_isolated = (r.c == 1) + (r.d == 1);
    return first_isolated >= second_isolated ? achlioptas::Choice::First
                                             : achlioptas::Choice::Second;
}

struct ForestScan {
    std::uint32_t isolated = 0;
    std::uint32_t max_size = 0;
    std::uint32_t components = 0;
};

/// Recomputes the forest statistics by a full pass over all vertices,
/// ignoring the forest's cached counters.
inline ForestScan full_scan(achlioptas::ComponentForest& forest) {
    std::unordered_map<achlioptas::Vertex, std::uint32_t> sizes;
    for (achlioptas::Vertex v = 0; v < forest.vertex_count(); ++v) {
        ++sizes[forest.representative(v)];
    }
    ForestScan scan;
    scan.components = static_cast<std::uint32_t>(sizes.size());
    for (const auto& [root, size] : sizes) {
        scan.isolated += size == 1;
        if (size > scan.max_size) {
            scan.max_size = size;
        }
    }
    return scan;
}

/// Minimal quadratic-find disjoint set: parent chain walk, no compression,
/// no size tracking. Used to cross-check partitions.
class NaiveDsu {
  public:
    explicit NaiveDsu(std::uint32_t n) : parent_(n) {
        for (std::uint32_t v = 0; v < n; ++v) {
            parent_[v] = v;
        }
    }

    std::uint32_t find(std::uint32_t v) const {
        while (parent_[v] != v) {
            v = parent_[v];
        }
        return v;
    }

    void unite(std::uint32_t u, std::uint32_t v) {
        const std::uint32_t ru = find(u);
        const std::uint32_t rv = find(v);
        if (ru != rv) {
            parent_[ru] = rv;
        }
    }

    bool same(std::uint32_t u, std::uint32_t v) const { return find(u) == find(v); }

  private:
    std::vector<std::uint32_t> parent_;
};

} // namespace oracles
