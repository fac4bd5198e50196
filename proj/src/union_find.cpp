#include "achlioptas/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace achlioptas {

ComponentForest::ComponentForest(Vertex n) {
    if (n == 0) {
        throw std::invalid_argument("ComponentForest: vertex count must be positive");
    }
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    size_.assign(n, 1);
    isolated_count_ = n;
    max_size_ = 1;
    component_count_ = n;
}

void ComponentForest::check_vertex(Vertex v) const {
    if (v >= parent_.size()) {
        throw std::out_of_range("ComponentForest: vertex id out of range");
    }
}

Vertex ComponentForest::representative(Vertex v) {
    check_vertex(v);
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]]; // path halving
        v = parent_[v];
    }
    return v;
}

std::uint32_t ComponentForest::component_size(Vertex v) {
    return size_[representative(v)];
}

bool ComponentForest::same_component(Vertex u, Vertex v) {
    return representative(u) == representative(v);
}

EdgeOutcome ComponentForest::add_edge(Vertex u, Vertex v) {
    if (u == v) {
        throw std::invalid_argument("ComponentForest: self-loops are rejected");
    }
    Vertex ru = representative(u);
    Vertex rv = representative(v);
    if (ru == rv) {
        return {false, ru, size_[ru]};
    }
    if (size_[ru] < size_[rv]) {
        std::swap(ru, rv);
    }
    isolated_count_ -= (size_[ru] == 1) + (size_[rv] == 1);
    parent_[rv] = ru;
    size_[ru] += size_[rv];
    max_size_ = std::max(max_size_, size_[ru]);
    --component_count_;
    return {true, ru, size_[ru]};
}

} // namespace achlioptas
