#pragma once
// helpers shared by the unit tests and the acceptance runner

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "mwis/assembly.hpp"
#include "mwis/esd.hpp"
#include "mwis/generators.hpp"
#include "mwis/graph.hpp"

namespace testing_support {

using namespace mwis;

struct EsdInstance {
    Graph g;
    Esd d;
};

// Build G around a random pattern so the decomposition is valid by construction:
// ends meeting at an H-vertex are made complete, other permitted pairs are coins.
inline EsdInstance random_esd_instance(Rng& rng, int n, int k, double p_hedge, double p_gedge) {
    std::bernoulli_distribution hcoin(p_hedge), gcoin(p_gedge), half(0.5);
    std::vector<std::pair<Vertex, Vertex>> hedges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (hcoin(rng)) hedges.emplace_back(a, b);
    Graph h(k, hedges);
    Esd d = empty_esd(h, n);
    const int parts = h.n() + h.m() + static_cast<int>(d.triangles.size());
    std::uniform_int_distribution<int> pick(0, parts - 1);
    // owner: 0 = H-vertex, 1 = H-edge, 2 = triangle
    std::vector<std::pair<int, int>> owner(n);
    for (Vertex x = 0; x < n; ++x) {
        int p = pick(rng);
        if (p < h.n()) {
            owner[x] = {0, p};
            d.eta_vertex[p].insert(x);
        } else if (p < h.n() + h.m()) {
            int e = p - h.n();
            owner[x] = {1, e};
            d.eta_edge[e].all.insert(x);
            if (half(rng)) d.eta_edge[e].end_u.insert(x);
            if (half(rng)) d.eta_edge[e].end_v.insert(x);
        } else {
            int t = p - h.n() - h.m();
            owner[x] = {2, t};
            d.triangles[t].set.insert(x);
        }
    }
    auto end_at = [&](int e, Vertex hv) -> const VertexSet& {
        return h.edges()[e].first == hv ? d.eta_edge[e].end_u : d.eta_edge[e].end_v;
    };
    auto shares_end = [&](Vertex x, Vertex y, bool& forced) {
        forced = false;
        auto [kx, ix] = owner[x];
        auto [ky, iy] = owner[y];
        if (kx == ky && ix == iy) return true;
        if (kx == 1 && ky == 1) {
            for (Vertex hv : {h.edges()[ix].first, h.edges()[ix].second}) {
                auto [c, dd] = h.edges()[iy];
                if ((hv == c || hv == dd) && end_at(ix, hv).contains(x) && end_at(iy, hv).contains(y)) {
                    forced = true;
                    return true;
                }
            }
            return false;
        }
        if (kx == 1) std::swap(kx, ky), std::swap(ix, iy), std::swap(x, y);
        if (kx == 0 && ky == 1) {
            auto [a, b] = h.edges()[iy];
            return (a == ix || b == ix) && end_at(iy, ix).contains(y);
        }
        if (kx == 2 && ky == 1) {
            auto [a, b] = h.edges()[iy];
            const auto& tri = d.triangles[ix].h;
            bool in_tri = std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b);
            return in_tri && end_at(iy, a).contains(y) && end_at(iy, b).contains(y);
        }
        return false;
    };
    std::vector<std::pair<Vertex, Vertex>> gedges;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            bool forced = false;
            if (!shares_end(x, y, forced)) continue;
            if (forced || gcoin(rng)) gedges.emplace_back(x, y);
        }
    return {Graph(n, gedges), d};
}

inline VertexSet random_independent(const Graph& g, const VertexSet& scope, Rng& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    VertexSet s(g.n());
    auto order = scope.to_vector();
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex v : order) {
        if (!coin(rng)) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v)) ok = ok && !s.contains(u);
        if (ok) s.insert(v);
    }
    return s;
}

// exhaustive max weight independent subset of scope (small scopes only)
inline VertexSet best_independent(const Graph& g, const WeightFn& w, const VertexSet& scope) {
    auto vs = scope.to_vector();
    VertexSet cur(g.n()), best(g.n());
    Weight bw = -1;
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight acc) {
        if (i == vs.size()) {
            // equal weight: the set holding the smallest vertex of the symmetric difference
            bool wins = acc > bw;
            if (acc == bw) {
                auto diff = (cur - best) | (best - cur);
                wins = !diff.empty() && cur.contains(diff.first());
            }
            if (wins) bw = acc, best = cur;
            return;
        }
        rec(i + 1, acc);
        for (Vertex u : g.neighbors(vs[i]))
            if (cur.contains(u)) return;
        cur.insert(vs[i]);
        rec(i + 1, acc + w[vs[i]]);
        cur.erase(vs[i]);
    };
    rec(0, 0);
    return best;
}

// independent BFS components, no library helpers
inline std::vector<std::vector<Vertex>> plain_components(const Graph& g, const std::vector<char>& alive) {
    std::vector<int> seen(g.n(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<Vertex> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (alive[y] && !seen[y]) seen[y] = 1, comp.push_back(y), stack.push_back(y);
        }
        out.push_back(comp);
    }
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph(n, e);
}

// subdivided claw: centre 0, three legs of `len` vertices
inline Graph subdivided_claw(int len) {
    std::vector<std::pair<Vertex, Vertex>> e;
    int next = 1;
    for (int leg = 0; leg < 3; ++leg) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e);
}

}  // namespace testing_support
