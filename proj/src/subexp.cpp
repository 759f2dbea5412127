#include <chrono>
#include <functional>
#include <unordered_map>

#include "mwis/assembly.hpp"
#include "mwis/solvers.hpp"

namespace mwis {

SubexpConfig subexp_config(const GraphClass& cls, bool force_disperser) {
    SubexpConfig c;
    c.cls = cls;
    auto up = uniform_params(cls);
    c.xi = up.xi;
    c.tau = up.tau;
    c.n0 = default_params(cls, Ratio(1, 4), 2).n0;
    c.force_disperser = force_disperser;
    return c;
}

namespace {

// every independent subset of s, ascending DFS; f(Y)
void for_each_independent(const Graph& g, const std::vector<Vertex>& s, const std::function<void(const VertexSet&)>& f) {
    VertexSet y(g.n());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.size()) {
            f(y);
            return;
        }
        rec(i + 1);
        for (Vertex x : g.neighbors(s[i]))
            if (y.contains(x)) return;
        y.insert(s[i]);
        rec(i + 1);
        y.erase(s[i]);
    };
    rec(0);
}

struct Subexp {
    const Graph& g;
    const WeightFn& w;
    const SubexpConfig& cfg;
    std::unordered_map<VertexSet, std::pair<VertexSet, Weight>, VertexSetHash> memo;
    SolveStats stats;

    using Sol = std::pair<VertexSet, Weight>;

    Sol pick(const Sol& a, const Sol& b) { return better_solution(a.first, a.second, b.first, b.second) ? a : b; }

    Sol branch(const VertexSet& scope, Vertex v, int depth) {
        VertexSet rest = scope;
        rest.erase(v);
        Sol ex = solve(rest, depth + 1);
        Sol in = solve(scope - closed_neighborhood(g, v), depth + 1);
        in.first.insert(v);
        in.second += w[v];
        return pick(in, ex);
    }

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
        const int n = scope.size();
        auto local = induced_subgraph(g, scope);
        if (n <= cfg.n0) {
            auto r = mwis_bruteforce(local.graph, restrict_weights(w, local));
            return {local.lift(r.set, g.n()), r.weight};
        }
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
        Vertex hub = -1;
        int hub_deg = -1;
        for (Vertex v = 0; v < local.graph.n(); ++v)
            if (local.graph.degree(v) > hub_deg) hub_deg = local.graph.degree(v), hub = v;
        const Vertex hub_parent = local.to_parent[hub];
        const bool light = degree_condition(local.graph, cfg.xi, cfg.tau);
        if (!light && !cfg.force_disperser) {
            ++stats.degree_branches;
            return branch(scope, hub_parent, depth);
        }
        DisperserEntry e;
        try {
            e = uniform_disperser(local.graph, cfg.cls, light, cfg.oracle);
        } catch (const UniformUnavailable&) {
            ++stats.fallback_branches;
            return branch(scope, hub_parent, depth);
        }
        int biggest = 0;
        for (const auto& a : atoms(local.graph, e.esd)) biggest = std::max(biggest, a.vertices.size());
        if (biggest >= n || e.x.size() > cfg.x_cap) {
            ++stats.fallback_branches;
            return branch(scope, hub_parent, depth);
        }
        ++stats.uniform_calls;
        const WeightFn wl = restrict_weights(w, local);
        Sol best{VertexSet(g.n()), -1};
        for_each_independent(local.graph, e.x.to_vector(), [&](const VertexSet& y) {
            Esd dy = restrict_esd(e.esd, closed_neighborhood(local.graph, y));
            AssemblyInput in;
            in.g = &local.graph;
            in.w = &wl;
            in.d = &dy;
            in.all_atoms = atoms(local.graph, dy);
            for (const auto& a : in.all_atoms) {
                if (a.vertices.empty()) {
                    in.per_atom.push_back(a.vertices);
                    continue;
                }
                auto r = solve(local.lift(a.vertices, g.n()), depth + 1);
                in.per_atom.push_back(local.lower(r.first));
            }
            auto out = assemble(in);
            ++stats.matching_calls;
            VertexSet iy = out.result | y;
            Sol cand{local.lift(iy, g.n()), weight_of(wl, iy)};
            if constexpr (kChecked)
                if (!is_independent(local.graph, iy)) throw std::logic_error("subexp_exact: I_Y not independent");
            if (best.second < 0) best = cand;
            else best = pick(cand, best);
        });
        return best;
    }
};

}  // namespace

SolveResult subexp_exact(const Graph& g, const WeightFn& w, const SubexpConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    check_weights(g, w);
    Subexp s{g, w, cfg, {}, {}};
    auto [set, weight] = s.solve(g.all(), 0);
    SolveResult r{set, weight, s.stats};
    r.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SolveResult subexp_exact(const Graph& g, const WeightFn& w, const GraphClass& cls) {
    return subexp_exact(g, w, subexp_config(cls));
}

}  // namespace mwis
