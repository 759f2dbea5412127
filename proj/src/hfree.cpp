#include <chrono>
#include <functional>
#include <unordered_map>

#include "mwis/solvers.hpp"

namespace mwis {

HShape analyse_h(const Graph& h) {
    if (h.n() == 0) throw std::invalid_argument("H is empty");
    HShape s;
    s.components = components(h);
    int need = 1;
    for (const auto& c : s.components) {
        if (!is_tree(h, c)) throw std::invalid_argument("H component is not a path or subdivided claw");
        std::vector<Vertex> hubs;
        c.for_each([&](Vertex v) {
            if (h.degree(v) > 3) throw std::invalid_argument("H has a vertex of degree above 3");
            if (h.degree(v) == 3) hubs.push_back(v);
        });
        if (hubs.size() > 1) throw std::invalid_argument("H component has two branch vertices");
        if (hubs.empty()) {
            need = std::max(need, c.size() / 2);  // P_k sits in legs of length ceil((k-1)/2)
            continue;
        }
        for (Vertex first : h.neighbors(hubs[0])) {
            int len = 1;
            Vertex prev = hubs[0], cur = first;
            while (h.degree(cur) == 2) {
                Vertex nxt = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
                prev = cur, cur = nxt, ++len;
            }
            need = std::max(need, len);
        }
    }
    s.claw_t = need;
    return s;
}

VertexSet maximal_embedding(const Graph& g, const VertexSet& scope, const Graph& h, const HShape& shape,
                            bool* all_embedded) {
    auto sub = induced_subgraph(g, scope);
    VertexSet chosen(h.n());
    std::vector<Vertex> copy;
    int taken = 0;
    for (const auto& c : shape.components) {
        VertexSet trial = chosen | c;
        auto hs = induced_subgraph(h, trial);
        auto found = find_induced_copy(sub.graph, hs.graph, 16);
        if (!found) continue;
        chosen = trial;
        copy = *found;
        ++taken;
    }
    if (all_embedded) *all_embedded = taken == static_cast<int>(shape.components.size());
    VertexSet x(g.n());
    for (Vertex v : copy) x.insert(sub.to_parent[v]);
    return x;
}

namespace {

using Sol = std::pair<VertexSet, Weight>;

void independent_subsets(const Graph& g, const std::vector<Vertex>& s, int cap,
                         const std::function<void(const VertexSet&)>& f) {
    VertexSet y(g.n());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == s.size()) {
            f(y);
            return;
        }
        rec(i + 1, left);
        if (left == 0) return;
        for (Vertex x : g.neighbors(s[i]))
            if (y.contains(x)) return;
        y.insert(s[i]);
        rec(i + 1, left - 1);
        y.erase(s[i]);
    };
    rec(0, cap);
}

struct HExact {
    const Graph& g;
    const WeightFn& w;
    const Graph& h;
    const HShape& shape;
    const HFreeConfig& cfg;
    SubexpConfig sub_cfg;
    std::unordered_map<VertexSet, Sol, VertexSetHash> memo;
    SolveStats stats;

    Sol pick(const Sol& a, const Sol& b) { return better_solution(a.first, a.second, b.first, b.second) ? a : b; }

    Sol solve(const VertexSet& scope, int depth) {
        ++stats.nodes;
        stats.depth = std::max(stats.depth, depth);
        if (scope.empty()) return {scope, 0};
        if (auto it = memo.find(scope); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        Sol out = compute(scope, depth);
        memo.emplace(scope, out);
        return out;
    }

    Sol compute(const VertexSet& scope, int depth) {
        auto comps = components(g, scope);
        if (comps.size() > 1) {
            Sol out{VertexSet(g.n()), 0};
            for (auto& c : comps) {
                auto r = solve(c, depth + 1);
                out.first |= r.first;
                out.second += r.second;
            }
            return out;
        }
        const long long n = scope.size();
        Vertex hub = -1;
        int hub_n = 0;
        scope.for_each([&](Vertex v) {
            int d = (closed_neighborhood(g, v) & scope).size();
            if (d > hub_n) hub_n = d, hub = v;
        });
        // |N[v]| > n^(1/9)
        auto pow9 = [](long long x) {
            __int128 r = 1;
            for (int i = 0; i < 9; ++i) r *= x;
            return r;
        };
        if (pow9(hub_n) > static_cast<__int128>(n)) {
            ++stats.degree_branches;
            VertexSet rest = scope;
            rest.erase(hub);
            Sol ex = solve(rest, depth + 1);
            Sol in = solve(scope - closed_neighborhood(g, hub), depth + 1);
            in.first.insert(hub);
            in.second += w[hub];
            return pick(in, ex);
        }
        bool all = false;
        VertexSet x = maximal_embedding(g, scope, h, shape, &all);
        if (all) throw ClassViolation("mwis_hfree_exact: G contains H", x.to_vector());
        const VertexSet nx = closed_neighborhood(g, x) & scope;
        if (pow9(nx.size()) >= static_cast<__int128>(n) * pow9(h.n()))
            throw std::logic_error("mwis_hfree_exact: |N[X]| bound violated");
        Sol best{VertexSet(g.n()), -1};
        independent_subsets(g, nx.to_vector(), INT32_MAX, [&](const VertexSet& z) {
            VertexSet rest = scope - nx - closed_neighborhood(g, z);
            auto sub = induced_subgraph(g, rest);
            auto r = subexp_exact(sub.graph, restrict_weights(w, sub), sub_cfg);
            stats.merge(r.stats);
            Sol cand{sub.lift(r.set, g.n()) | z, r.weight + weight_of(w, z)};
            best = best.second < 0 ? cand : pick(cand, best);
        });
        return best;
    }
};

}  // namespace

SolveResult mwis_hfree_exact(const Graph& g, const WeightFn& w, const Graph& h, const HFreeConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    check_weights(g, w);
    HShape shape = analyse_h(h);
    HExact e{g, w, h, shape, cfg, subexp_config(GraphClass::claw(shape.claw_t), cfg.force_disperser), {}, {}};
    e.sub_cfg.oracle = cfg.oracle;
    if (cfg.n0 > 0) e.sub_cfg.n0 = cfg.n0;
    auto [set, weight] = e.solve(g.all(), 0);
    SolveResult r{set, weight, e.stats};
    r.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SolveResult mwis_hfree_approx(const Graph& g, const WeightFn& w, Ratio eps, const Graph& h, const HFreeConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    check_weights(g, w);
    HShape shape = analyse_h(h);
    SolveResult res;
    res.set = VertexSet(g.n());
    const Ratio beta = eps / Ratio(2 * h.n());
    const int cap = std::min(heavy_bound(std::max(2, g.n()), beta), cfg.j_cap);
    const GraphClass ycls = GraphClass::claw(shape.claw_t);
    const Ratio half = eps / Ratio(2);
    Sol best{VertexSet(g.n()), -1};
    independent_subsets(g, g.all().to_vector(), cap, [&](const VertexSet& j) {
        const VertexSet g1 = g.all() - closed_neighborhood(g, j);
        bool all = false;
        VertexSet x = maximal_embedding(g, g1, h, shape, &all);
        if (all) throw ClassViolation("mwis_hfree_approx: G contains H", x.to_vector());
        const VertexSet g2 = g1 - closed_neighborhood(g, x);
        auto sub = induced_subgraph(g, g2);
        VertexSet got = j;
        if (sub.graph.n() > 0) {
            QptasConfig qc = qptas_config(sub.graph.n(), half, ycls, cfg.internal_factor, cfg.j_cap);
            qc.oracle = cfg.oracle;
            auto r = qptas(sub.graph, restrict_weights(w, sub), qc);
            res.stats.merge(r.stats);
            got |= sub.lift(r.set, g.n());
        }
        Sol cand{got, weight_of(w, got)};
        if (best.second < 0 || better_solution(cand.first, cand.second, best.first, best.second)) best = cand;
    });
    res.set = best.first;
    res.weight = best.second;
    if (!is_independent(g, res.set)) throw std::logic_error("mwis_hfree_approx: result is not independent");
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace mwis
