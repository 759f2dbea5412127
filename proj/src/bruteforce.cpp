#include <chrono>
#include <unordered_map>

#include "mwis/solvers.hpp"

namespace mwis {

void SolveStats::merge(const SolveStats& o) {
    nodes += o.nodes;
    depth = std::max(depth, o.depth);
    matching_calls += o.matching_calls;
    disperser_entries += o.disperser_entries;
    memo_hits += o.memo_hits;
    uniform_calls += o.uniform_calls;
    fallback_branches += o.fallback_branches;
    degree_branches += o.degree_branches;
}

nlohmann::json stats_to_json(const SolveStats& s, bool with_time) {
    nlohmann::json j = {{"nodes", s.nodes},
                        {"depth", s.depth},
                        {"matching_calls", s.matching_calls},
                        {"disperser_entries", s.disperser_entries},
                        {"memo_hits", s.memo_hits},
                        {"uniform_calls", s.uniform_calls},
                        {"fallback_branches", s.fallback_branches},
                        {"degree_branches", s.degree_branches}};
    if (with_time) j["wall_ms"] = s.wall_ms;
    return j;
}

bool better_solution(const VertexSet& a, Weight wa, const VertexSet& b, Weight wb) {
    if (wa != wb) return wa > wb;
    VertexSet d = (a - b) | (b - a);
    if (d.empty()) return false;
    return a.contains(d.first());
}

namespace {

struct Brute {
    const Graph& g;
    const WeightFn& w;
    std::unordered_map<VertexSet, std::pair<VertexSet, Weight>, VertexSetHash> memo;
    SolveStats stats;

    std::pair<VertexSet, Weight> solve(const VertexSet& scope, int depth) {
        ++stats.nodes;
        stats.depth = std::max(stats.depth, depth);
        if (scope.empty()) return {scope, 0};
        if (auto it = memo.find(scope); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        std::pair<VertexSet, Weight> out;
        auto comps = components(g, scope);
        if (comps.size() > 1) {
            out = {VertexSet(g.n()), 0};
            for (auto& c : comps) {
                auto r = solve(c, depth + 1);
                out.first |= r.first;
                out.second += r.second;
            }
        } else {
            Vertex v = -1;
            int best_deg = -1;
            scope.for_each([&](Vertex x) {
                int d = (closed_neighborhood(g, x) & scope).size();
                if (d > best_deg) best_deg = d, v = x;
            });
            VertexSet rest = scope;
            rest.erase(v);
            auto ex = solve(rest, depth + 1);
            auto in = solve(scope - closed_neighborhood(g, v), depth + 1);
            in.first.insert(v);
            in.second += w[v];
            out = better_solution(in.first, in.second, ex.first, ex.second) ? in : ex;
        }
        memo.emplace(scope, out);
        return out;
    }
};

}  // namespace

SolveResult mwis_bruteforce(const Graph& g, const WeightFn& w, int cap) {
    if (g.n() > cap) throw CapExceeded("mwis_bruteforce: n = " + std::to_string(g.n()) + " above cap");
    check_weights(g, w);
    auto t0 = std::chrono::steady_clock::now();
    Brute b{g, w, {}, {}};
    auto [set, weight] = b.solve(g.all(), 0);
    SolveResult r{set, weight, b.stats};
    r.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace mwis
