#pragma once

#include <stdexcept>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/patterns.hpp"

namespace mwis {

using Path = std::vector<Vertex>;

struct ClassViolation : std::runtime_error {
    std::vector<Vertex> witness;
    ClassViolation(const std::string& msg, std::vector<Vertex> w) : std::runtime_error(msg), witness(std::move(w)) {}
};

// P1-P3 recomputed for a candidate path.
struct SeparatorCertificate {
    Path path;
    Ratio alpha;
    // heaviest component weight of G_0 .. G_{k+1}; G_0 = G - u
    std::vector<Weight> level_max;
    bool p1 = false, p2 = false, p3 = false;
    bool ok() const { return p1 && p2 && p3; }
};

// Levels: G_0 = G - u, G_i = G - N[v_0..v_{i-1}].
VertexSet gyarfas_level(const Graph& g, Vertex u, const Path& q, int i);

// Empty path first, then every prefix of the z-guided walk for each target z.
std::vector<Path> gyarfas_family(const Graph& g, Vertex u);
SeparatorCertificate check_gyarfas(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha, const Path& q);
SeparatorCertificate gyarfas_select(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha);
// Direct weight-driven construction (no family); same guarantee.
SeparatorCertificate gyarfas_construct(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha);

std::vector<Path> long_hole_family(const Graph& g, int t, Vertex u = 0);
struct HoleSeparator {
    Path path;
    Weight max_component = 0;
};
// every component of G - N[Q] weighs at most 3/4 w(G)
bool hole_balanced(const Graph& g, const WeightFn& w, const Path& q);
HoleSeparator long_hole_select(const Graph& g, int t, const WeightFn& w, Vertex u = 0);
HoleSeparator long_hole_construct(const Graph& g, int t, const WeightFn& w, Vertex u = 0);

VertexSet path_set(const Graph& g, const Path& q);
Weight max_component_weight(const Graph& g, const WeightFn& w, const VertexSet& scope);

}  // namespace mwis
