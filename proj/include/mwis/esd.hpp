#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "mwis/graph.hpp"

namespace mwis {

// Extended strip decomposition of G[domain]. Vertex sets live in G's id space.
// Edge data is aligned with pattern.edges() (u < v); end_u belongs to the smaller endpoint.
struct Esd {
    struct EdgeSets {
        VertexSet all, end_u, end_v;
    };
    struct Triangle {
        std::array<Vertex, 3> h;  // sorted H-vertices
        VertexSet set;
    };

    Graph pattern;
    std::vector<VertexSet> eta_vertex;
    std::vector<EdgeSets> eta_edge;
    std::vector<Triangle> triangles;  // every triangle of H, lexicographic order

    int universe() const;
    int edge_index(Vertex a, Vertex b) const;  // -1 if absent
    VertexSet domain() const;                  // union of all parts
    bool is_trivial_pattern() const { return pattern.m() == 0; }
};

// Build an ESD shell over H with all sets empty and triangles enumerated.
Esd empty_esd(const Graph& pattern, int universe);
Esd trivial_esd(const Graph& g, const VertexSet& scope);
Esd trivial_esd(const Graph& g);

struct EsdReport {
    bool ok = true;
    std::vector<std::string> violations;
};
// Checks the ESD decomposes G[scope].
EsdReport validate_esd(const Graph& g, const Esd& d, const VertexSet& scope);
EsdReport validate_esd(const Graph& g, const Esd& d);

struct Atom {
    enum class Kind { EdgeBot, EdgeU, EdgeV, EdgeFull, Vertex, Triangle };
    Kind kind;
    int index;  // edge, H-vertex or triangle index
    VertexSet vertices;
    bool trivial = false;
};

std::string atom_name(const Esd& d, const Atom& a);

// Per edge: bot, u, v, full; then one atom per H-vertex; then per triangle.
std::vector<Atom> atoms(const Graph& g, const Esd& d);
bool conflicts(const Atom& a, const Atom& b, const Esd& d);

// Indices into atoms(g, d).
std::vector<int> atom_family_of_independent_set(const Graph& g, const Esd& d, const std::vector<Atom>& all_atoms,
                                                const VertexSet& independent);
bool family_is_independent(const std::vector<Atom>& all_atoms, const std::vector<int>& family, const Esd& d);

Esd restrict_esd(const Esd& d, const VertexSet& removed);
// Adds one isolated H-vertex per component of G[extra]; `extra` must be disjoint from the domain.
Esd pad_with_components(const Esd& d, const Graph& g, const VertexSet& extra);
VertexSet peripheral_vertices(const Graph& g, const Esd& d);
// Re-express an ESD of a relabeled induced subgraph in parent ids.
Esd lift_esd(const Esd& d, const Subgraph& sub, int parent_universe);
bool is_trivial_esd(const Graph& g, const Esd& d);

// Exhaustive check over triples of disjoint, non-adjacent induced paths ending in Z.
bool shatters(const Graph& g, const Esd& d, const std::array<Vertex, 3>& z, int cap = 14);

nlohmann::json esd_to_json(const Esd& d);
Esd esd_from_json(const nlohmann::json& j, int universe);

}  // namespace mwis
