#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mwis/esd.hpp"
#include "mwis/generators.hpp"
#include "mwis/pathfinder.hpp"

namespace mwis {

// (X, ESD of G - X); sets in G's ids.
struct FamilyEntry {
    VertexSet x;
    Esd esd;
    bool trivial = true;
    std::string origin;
};

FamilyEntry trivial_entry(const Graph& g, const VertexSet& x, std::string origin);
FamilyEntry lift_entry(const FamilyEntry& e, const Subgraph& sub, int parent_universe);

// Externally supplied decompositions, asked for by (graph, decomposed set, Z).
using EsdProvider =
    std::function<std::optional<Esd>(const Graph& g, const VertexSet& scope, const std::array<Vertex, 3>& z)>;

// Smallest vertex set S with Z in S, S inside scope and G[S] a tree (lexicographically first among smallest).
std::optional<VertexSet> find_induced_tree(const Graph& g, const VertexSet& scope, const std::array<Vertex, 3>& z,
                                           int cap = 20);
std::optional<VertexSet> find_induced_tree(const Graph& g, const std::array<Vertex, 3>& z, int cap = 20);

struct TreeOrEsd {
    enum class Kind { Tree, Decomposition, Failure } kind = Kind::Failure;
    VertexSet tree;
    Esd esd;  // decomposes G[scope]
    std::string reason;
};

TreeOrEsd claw_shatter(const Graph& g, const VertexSet& scope, const std::array<Vertex, 3>& z,
                       const std::optional<Esd>& external = std::nullopt, int cap = 20);
TreeOrEsd claw_shatter(const Graph& g, const std::array<Vertex, 3>& z, const std::optional<Esd>& external = std::nullopt,
                       int cap = 20);

struct OracleOptions {
    int tree_cap = 20;
    EsdProvider provider;
    bool collect_all_claws = false;  // keep going after the first claw
    bool validate = true;            // run validate_esd on every emitted entry
};

struct ClawResult {
    std::optional<VertexSet> claw;
    Vertex center = -1;
    std::vector<VertexSet> claws;  // every claw seen (collect_all_claws)
    std::vector<FamilyEntry> family;
    int failures = 0;
    int shatter_calls = 0;
    int gyarfas_paths = 0;
};

// Induced (>= t)-claw with tip u, or the enumerated family. G must be connected.
ClawResult find_claw(const Graph& g, Vertex u, int t, const OracleOptions& opt = {});

struct LobsterResult {
    std::optional<VertexSet> lobster;
    std::vector<FamilyEntry> family;
    int failures = 0;
    int right_claws = 0, left_claws = 0, trees_without_lobster = 0;
};

LobsterResult find_lobster(const Graph& g, int t, const OracleOptions& opt = {}, Vertex u = 0);

// w(N[v]) <= sigma^power * w(G) for every v
bool is_light(const Graph& g, const WeightFn& w, Ratio sigma, int power);
// w(A) <= (1 - sigma^power) w(G) and w(X) <= sigma * w(G - A) for every atom A of the entry
bool meets_conclusion(const Graph& g, const WeightFn& w, const FamilyEntry& e, Ratio sigma, int power);

// Sub-claw of an induced subdivided claw: vertices within distance t of the center.
VertexSet truncate_claw(const Graph& g, const VertexSet& claw, Vertex center, int t);

struct PlantedClaw {
    Graph g;
    Vertex tip = 0;
    int t = 4;
};
// Long induced path 0..L-1 plus a hub claw tied to three far-apart path segments, plus padding.
PlantedClaw planted_claw_instance(int t, int padding, Rng& rng);

}  // namespace mwis
