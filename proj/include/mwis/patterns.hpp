#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct GraphClass {
    enum class Kind { Pt, CgeT, YgeT, LgeT, ExplicitH };
    Kind kind = Kind::Pt;
    int t = 0;
    Graph h;  // ExplicitH only

    static GraphClass pt(int t) { return {Kind::Pt, t, {}}; }
    static GraphClass hole(int t) { return {Kind::CgeT, t, {}}; }
    static GraphClass claw(int t) { return {Kind::YgeT, t, {}}; }
    static GraphClass lobster(int t) { return {Kind::LgeT, t, {}}; }
    static GraphClass explicit_h(Graph h) { return {Kind::ExplicitH, 0, std::move(h)}; }
    // "pt:5", "hole:5", "claw:4", "lobster:3", "hfree:<graph file>"
    static GraphClass parse(const std::string& text);
    std::string name() const;
};

// returns host vertex for each pattern vertex
std::optional<std::vector<Vertex>> find_induced_copy(const Graph& g, const Graph& pattern,
                                                     int pattern_cap = 12);

struct FreenessResult {
    bool free = true;
    std::vector<Vertex> witness;  // vertex set of an offending induced subgraph
};

FreenessResult freeness_check(const Graph& g, const GraphClass& cls);

// Shape recognizers on G[S].
bool is_tree(const Graph& g, const VertexSet& s);
bool is_induced_path(const Graph& g, const VertexSet& s);
bool is_induced_cycle(const Graph& g, const VertexSet& s);
// center of G[S] if it is an induced (>=t)-claw, else -1
Vertex claw_center(const Graph& g, const VertexSet& s, int t);
bool is_lobster(const Graph& g, const VertexSet& s, int t);

}  // namespace mwis
