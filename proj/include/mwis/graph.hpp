#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mwis/ratio.hpp"
#include "mwis/vertex_set.hpp"

namespace mwis {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Raised when an exhaustive routine is called above its size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on 0..n-1, immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;
    // sorted (u < v) pairs
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    VertexSet all() const { return VertexSet::full(n()); }
    VertexSet empty_set() const { return VertexSet(n()); }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

using WeightFn = std::vector<Weight>;

inline WeightFn unit_weights(const Graph& g) { return WeightFn(g.n(), 1); }
Weight weight_of(const WeightFn& w, const VertexSet& s);
void check_weights(const Graph& g, const WeightFn& w);

struct WeightedGraph {
    Graph graph;
    WeightFn weights;
};

WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);
std::string format_graph(const Graph& g, const WeightFn& w);
// weights-only file: lines "n <v> <w>"; unspecified vertices default to 1
WeightFn parse_weights(const std::string& text, int n);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
// connected components of G[scope], ordered by smallest vertex
std::vector<VertexSet> components(const Graph& g, const VertexSet& scope);
std::vector<VertexSet> components(const Graph& g);
VertexSet component_of(const Graph& g, const VertexSet& scope, Vertex v);
bool is_connected(const Graph& g, const VertexSet& scope);
bool is_independent(const Graph& g, const VertexSet& s);
bool has_edge_inside(const Graph& g, const VertexSet& s);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // local -> parent id
    std::vector<Vertex> from_parent;  // parent id -> local or -1
    VertexSet lift(const VertexSet& local, int parent_universe) const;
    VertexSet lower(const VertexSet& parent) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
WeightFn restrict_weights(const WeightFn& w, const Subgraph& sub);

}  // namespace mwis
