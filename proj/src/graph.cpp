#include "mwis/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mwis {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adj_(n) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex x = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), x);
}

Weight weight_of(const WeightFn& w, const VertexSet& s) {
    Weight total = 0;
    s.for_each([&](Vertex v) { total = checked_add(total, w[v]); });
    return total;
}

void check_weights(const Graph& g, const WeightFn& w) {
    if (static_cast<int>(w.size()) != g.n()) throw std::invalid_argument("weight vector size mismatch");
    Weight total = 0;
    for (auto x : w) {
        if (x < 0) throw std::invalid_argument("negative vertex weight");
        total = checked_add(total, x);
    }
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    long long declared_m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    WeightFn w;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        auto read_int = [&](const char* what) {
            long long x;
            if (!(ls >> x)) throw ParseError(line_no, std::string("expected ") + what);
            return x;
        };
        if (tag == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate header");
            long long nn = read_int("vertex count");
            declared_m = read_int("edge count");
            if (nn < 0 || declared_m < 0) throw ParseError(line_no, "negative count");
            n = static_cast<int>(nn);
            w.assign(n, 1);
        } else if (tag == "e" || tag == "n") {
            if (n < 0) throw ParseError(line_no, "data before header");
            long long a = read_int("vertex");
            long long b = read_int(tag == "e" ? "vertex" : "weight");
            if (a < 0 || a >= n) throw ParseError(line_no, "vertex " + std::to_string(a) + " out of range");
            if (tag == "e") {
                if (b < 0 || b >= n) throw ParseError(line_no, "vertex " + std::to_string(b) + " out of range");
                if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
                const std::pair<Vertex, Vertex> e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
                if (!seen.insert({e.first, e.second}).second)
                    throw ParseError(line_no, "repeated edge " + std::to_string(a) + " " + std::to_string(b));
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            } else {
                if (b < 0) throw ParseError(line_no, "negative weight");
                w[a] = b;
            }
        } else {
            throw ParseError(line_no, "unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
    }
    if (n < 0) throw ParseError(line_no, "missing 'p' header");
    if (static_cast<long long>(edges.size()) != declared_m)
        throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(edges.size()));
    WeightedGraph out{Graph(n, edges), std::move(w)};
    check_weights(out.graph, out.weights);
    return out;
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const Graph& g, const WeightFn& w) {
    std::ostringstream out;
    out << "p " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    for (int v = 0; v < g.n(); ++v)
        if (w[v] != 1) out << "n " << v << ' ' << w[v] << '\n';
    return out.str();
}

WeightFn parse_weights(const std::string& text, int n) {
    WeightFn w(n, 1);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c" || tag == "p" || tag == "e") continue;
        long long v, x;
        if (tag != "n" || !(ls >> v >> x)) throw ParseError(line_no, "expected 'n <v> <w>'");
        if (v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
        if (x < 0) throw ParseError(line_no, "negative weight");
        w[v] = x;
    }
    return w;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](Vertex v) {
        for (Vertex u : g.neighbors(v)) out.insert(u);
    });
    return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out(g.n());
    out.insert(v);
    for (Vertex u : g.neighbors(v)) out.insert(u);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) - s; }

VertexSet component_of(const Graph& g, const VertexSet& scope, Vertex v) {
    VertexSet comp(g.n());
    std::vector<Vertex> stack{v};
    comp.insert(v);
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (scope.contains(y) && !comp.contains(y)) {
                comp.insert(y);
                stack.push_back(y);
            }
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& scope) {
    std::vector<VertexSet> out;
    VertexSet left = scope;
    for (Vertex v = left.first(); v >= 0; v = left.first()) {
        out.push_back(component_of(g, scope, v));
        left -= out.back();
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g, const VertexSet& scope) {
    Vertex v = scope.first();
    return v < 0 || component_of(g, scope, v) == scope;
}

bool has_edge_inside(const Graph& g, const VertexSet& s) {
    bool found = false;
    s.for_each([&](Vertex v) {
        if (found) return;
        for (Vertex u : g.neighbors(v))
            if (u > v && s.contains(u)) {
                found = true;
                return;
            }
    });
    return found;
}

bool is_independent(const Graph& g, const VertexSet& s) { return !has_edge_inside(g, s); }

VertexSet Subgraph::lift(const VertexSet& local, int parent_universe) const {
    VertexSet out(parent_universe);
    local.for_each([&](Vertex v) { out.insert(to_parent[v]); });
    return out;
}

VertexSet Subgraph::lower(const VertexSet& parent) const {
    VertexSet out(graph.n());
    parent.for_each([&](Vertex v) {
        if (from_parent[v] >= 0) out.insert(from_parent[v]);
    });
    return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    Subgraph sub;
    sub.from_parent.assign(g.n(), -1);
    s.for_each([&](Vertex v) {
        sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    });
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : sub.to_parent)
        for (Vertex u : g.neighbors(v))
            if (u > v && sub.from_parent[u] >= 0) edges.emplace_back(sub.from_parent[v], sub.from_parent[u]);
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
    return sub;
}

WeightFn restrict_weights(const WeightFn& w, const Subgraph& sub) {
    WeightFn out(sub.to_parent.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = w[sub.to_parent[i]];
    return out;
}

}  // namespace mwis
