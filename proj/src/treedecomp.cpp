#include <functional>

#include "mwis/solvers.hpp"

namespace mwis {

int longhole_width_bound(const Graph& g, int t) { return 3 * (t - 1) * (g.max_degree() + 1); }

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    TdReport r;
    const int k = td.tree.n();
    if (static_cast<int>(td.bags.size()) != k) r.is_tree = false;
    if (k > 0 && (td.tree.m() != k - 1 || !is_connected(td.tree, td.tree.all()))) r.is_tree = false;
    if (!r.is_tree) return r;
    VertexSet covered(g.n());
    for (const auto& b : td.bags) covered |= b;
    r.vertex_coverage = covered == g.all();
    for (auto [u, v] : g.edges()) {
        bool hit = false;
        for (const auto& b : td.bags) hit = hit || (b.contains(u) && b.contains(v));
        if (!hit) r.edge_coverage = false;
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet nodes(k);
        for (int i = 0; i < k; ++i)
            if (td.bags[i].contains(v)) nodes.insert(i);
        if (!nodes.empty() && !is_connected(td.tree, nodes)) r.subtree = false;
    }
    return r;
}

TreeDecomposition treedecomp_longhole(const Graph& g, int t) {
    if (t < 4) throw std::invalid_argument("treedecomp_longhole: t must be at least 4");
    const int s = (t - 1) * (g.max_degree() + 1);  // |N[Q]| for |Q| < t
    std::vector<VertexSet> bags;
    std::vector<std::pair<Vertex, Vertex>> edges;

    // C connected and untouched, S = N(C) inside the parent bag
    std::function<int(const VertexSet&, const VertexSet&)> build = [&](const VertexSet& c, const VertexSet& sb) {
        const VertexSet u = c | sb;
        const int id = static_cast<int>(bags.size());
        if (u.size() <= 3 * s) {
            bags.push_back(u);
            return id;
        }
        auto sub = induced_subgraph(g, u);
        WeightFn wt(sub.graph.n(), 1);
        if (sb.size() > 2 * s) {
            // balance the boundary
            for (Vertex v = 0; v < sub.graph.n(); ++v) wt[v] = sb.contains(sub.to_parent[v]) ? 1 : 0;
        }
        auto sep = long_hole_select(sub.graph, t, wt, 0);
        VertexSet p = sub.lift(closed_neighborhood(sub.graph, path_set(sub.graph, sep.path)), g.n());
        VertexSet bag = sb | p;
        if (!(bag.intersects(c))) bag.insert(c.first());
        bags.push_back(bag);
        for (const auto& child : components(g, c - bag)) {
            VertexSet boundary = open_neighborhood(g, child) & bag;
            int kid = build(child, boundary);
            edges.emplace_back(id, kid);
        }
        return id;
    };

    int prev = -1;
    for (const auto& comp : components(g)) {
        int root = build(comp, VertexSet(g.n()));
        if (prev >= 0) edges.emplace_back(prev, root);
        prev = root;
    }
    TreeDecomposition td;
    td.tree = Graph(static_cast<int>(bags.size()), edges);
    td.bags = std::move(bags);
    for (const auto& b : td.bags) td.width = std::max(td.width, b.size() - 1);
    auto rep = validate_tree_decomposition(g, td);
    if (!rep.ok()) throw std::logic_error("treedecomp_longhole: invalid decomposition");
    return td;
}

}  // namespace mwis
