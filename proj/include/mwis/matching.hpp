#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct WeightedEdge {
    Vertex u, v;
    std::int64_t w;
};

struct Matching {
    std::vector<std::pair<Vertex, Vertex>> edges;  // (min, max), sorted
    std::int64_t weight = 0;
};

// Maximum-weight matching (not necessarily perfect). Non-positive edges are dropped first.
// Among optimal matchings the lexicographically smallest sorted edge list is returned.
Matching max_weight_matching(int n, const std::vector<WeightedEdge>& edges);

// Same contract by exhaustive enumeration; |E| <= cap.
Matching brute_force_matching(int n, const std::vector<WeightedEdge>& edges, int cap = 24);

}  // namespace mwis
