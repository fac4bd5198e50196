#pragma once

#include <cstdint>
#include <vector>

namespace achlioptas {

using Vertex = std::uint32_t;

/// Result of ComponentForest::add_edge.
struct EdgeOutcome {
    bool merged;        ///< false: endpoints were already in the same component
    Vertex root;        ///< representative of the component holding both endpoints
    std::uint32_t size; ///< size of that component after the call
};

/// Disjoint-set forest over n vertices with union by size and path halving.
/// Tracks the number of isolated vertices (components of size 1) and the size
/// of the largest component in O(1). Edges themselves are never stored; the
/// process only needs the component structure.
class ComponentForest {
  public:
    /// n singleton components. Throws std::invalid_argument for n = 0.
    explicit ComponentForest(Vertex n);

    Vertex vertex_count() const { return static_cast<Vertex>(parent_.size()); }

    /// Representative of v's component, with path halving.
    /// Throws std::out_of_range for invalid v.
    Vertex representative(Vertex v);

    /// Size of v's component.
    std::uint32_t component_size(Vertex v);

    bool same_component(Vertex u, Vertex v);

    /// Merge the components of u and v, or report the edge as redundant when
    /// they already coincide. Rejects self-loops (std::invalid_argument).
    EdgeOutcome add_edge(Vertex u, Vertex v);

    std::uint32_t isolated_count() const { return isolated_count_; }
    std::uint32_t max_size() const { return max_size_; }
    Vertex component_count() const { return component_count_; }

  private:
    void check_vertex(Vertex v) const;

    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> size_; // valid at roots only
    std::uint32_t isolated_count_ = 0;
    std::uint32_t max_size_ = 1;
    Vertex component_count_ = 0;
};

} // namespace achlioptas
