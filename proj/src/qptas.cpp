#include <chrono>
#include <map>
#include <unordered_map>

#include "mwis/assembly.hpp"
#include "mwis/solvers.hpp"

namespace mwis {

Rescaled rescale_weights(const Graph& g, const WeightFn& w, Ratio eps) {
    check_weights(g, w);
    if (eps.num != 1 || eps.den < 1) throw std::invalid_argument("rescale_weights: 1/eps must be a positive integer");
    Weight mx = 0;
    for (auto x : w) mx = std::max(mx, x);
    if (mx == 0) throw std::invalid_argument("rescale_weights: all weights are zero");
    const Weight target = checked_mul(g.n(), eps.den);  // n / eps
    Rescaled r;
    r.w.assign(g.n(), 0);
    r.kept = VertexSet(g.n());
    r.cert.max_before = mx;
    r.cert.factor = BigRational(BigInt(target), BigInt(mx));
    for (Vertex v = 0; v < g.n(); ++v) {
        auto scaled = static_cast<__int128>(w[v]) * target / mx;
        r.w[v] = static_cast<Weight>(scaled);
        if (r.w[v] > 0) r.kept.insert(v);
        else ++r.cert.discarded;
        r.cert.max_after = std::max(r.cert.max_after, r.w[v]);
    }
    return r;
}

namespace {

int ceil_log2(const BigInt& x) {
    int k = 0;
    BigInt p = 1;
    while (p < x) p *= 2, ++k;
    return k;
}

}  // namespace

QptasConfig qptas_config(int n, Ratio eps, const GraphClass& cls, int internal_factor, int j_cap) {
    if (!(Ratio(0) < eps && eps < Ratio(1))) throw std::invalid_argument("qptas: eps outside (0,1)");
    QptasConfig c;
    c.cls = cls;
    c.internal_factor = internal_factor;
    c.j_cap = j_cap;
    // round down to 1/k
    std::int64_t k = (eps.den + eps.num - 1) / eps.num;
    c.eps = Ratio(1, k);
    c.eps_internal = Ratio(1, k * internal_factor);
    const std::int64_t nn = std::max(1, n);
    c.m = BigRational(BigInt(nn) * nn * c.eps_internal.den);
    c.gamma = c.eps_internal / Ratio(1 + ceil_log2(BigInt(nn) * nn * c.eps_internal.den));
    c.delta = class_p(cls, c.gamma);
    return c;
}

namespace {

struct Qptas {
    const Graph& g;  // rescaled, positive weights only
    const WeightFn& w;
    const QptasConfig& cfg;
    const std::vector<Vertex>& to_root;
    int cutoff;  // depth at which m' < 1; g.n() + 2 means never
    std::map<std::pair<VertexSet, int>, std::pair<VertexSet, Weight>> memo;
    SolveStats stats;
    FamilyCache cache;

    std::pair<VertexSet, Weight> rec(const VertexSet& scope, int depth) {
        ++stats.nodes;
        stats.depth = std::max(stats.depth, depth);
        if (depth >= cutoff) return {VertexSet(g.n()), 0};
        if (!has_edge_inside(g, scope)) return {scope, weight_of(w, scope)};
        const int key_depth = cutoff > g.n() + 1 ? -1 : depth;
        if (auto it = memo.find({scope, key_depth}); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        auto local = induced_subgraph(g, scope);
        const WeightFn wl = restrict_weights(w, local);
        Disperser d;
        try {
            d = build_disperser(local.graph, cfg.cls, cfg.gamma, cfg.j_cap, cfg.oracle, &cache);
        } catch (const ClassViolation& cv) {
            std::vector<Vertex> lifted;
            for (Vertex v : cv.witness) lifted.push_back(to_root[local.to_parent[v]]);
            throw ClassViolation(std::string(cv.what()) + " (subgraph of " + std::to_string(scope.size()) +
                                     " vertices)",
                                 lifted);
        }
        stats.disperser_entries += static_cast<long long>(d.entries.size());
        const int n = scope.size();
        bool have = false;
        std::pair<VertexSet, Weight> best{VertexSet(g.n()), 0};
        for (const auto& e : d.entries) {
            AssemblyInput in;
            in.g = &local.graph;
            in.w = &wl;
            in.d = &e.esd;
            in.all_atoms = atoms(local.graph, e.esd);
            bool whole = false;
            for (const auto& a : in.all_atoms) whole = whole || a.vertices.size() >= n;
            // an atom equal to G' is never shrinking for a positive w_I
            if (whole) continue;
            for (const auto& a : in.all_atoms) {
                if (a.vertices.empty()) {
                    in.per_atom.push_back(a.vertices);
                    continue;
                }
                auto r = rec(local.lift(a.vertices, g.n()), depth + 1);
                in.per_atom.push_back(local.lower(r.first));
            }
            auto out = assemble(in);
            ++stats.matching_calls;
            VertexSet lifted = local.lift(out.result, g.n());
            if (!have || better_solution(lifted, out.weight, best.first, best.second)) best = {lifted, out.weight};
            have = true;
        }
        if (!have) throw std::logic_error("qptas: no disperser entry with proper atoms");
        if constexpr (kChecked)
            if (!is_independent(g, best.first)) throw std::logic_error("qptas: assembled set is not independent");
        memo.emplace(std::pair{scope, key_depth}, best);
        return best;
    }
};

}  // namespace

SolveResult qptas(const Graph& g, const WeightFn& w, const QptasConfig& given) {
    auto t0 = std::chrono::steady_clock::now();
    check_weights(g, w);
    SolveResult res;
    res.set = VertexSet(g.n());
    Weight mx = 0;
    for (auto x : w) mx = std::max(mx, x);
    if (mx == 0) return res;
    QptasConfig cfg = qptas_config(g.n(), given.eps, given.cls, given.internal_factor, given.j_cap);
    cfg.oracle = given.oracle;
    auto rs = rescale_weights(g, w, cfg.eps_internal);
    auto sub = induced_subgraph(g, rs.kept);
    const WeightFn ws = restrict_weights(rs.w, sub);
    // m (1 - delta)^d < 1 first happens at depth `cutoff`; depths past n never occur
    const int n = sub.graph.n();
    int cutoff = n + 2;
    BigRational mp = cfg.m;
    const BigRational shrink = BigRational(1) - cfg.delta;
    for (int d = 0; d <= n + 1; ++d) {
        if (mp < 1) {
            cutoff = d;
            break;
        }
        mp *= shrink;
    }
    Qptas q{sub.graph, ws, cfg, sub.to_parent, cutoff, {}, {}, {}};
    auto [set, wt] = q.rec(sub.graph.all(), 0);
    (void)wt;
    res.set = sub.lift(set, g.n());
    res.weight = weight_of(w, res.set);
    res.stats = q.stats;
    if (!is_independent(g, res.set)) throw std::logic_error("qptas: result is not independent");
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SolveResult qptas(const Graph& g, const WeightFn& w, Ratio eps, const GraphClass& cls) {
    QptasConfig cfg;
    cfg.eps = eps;
    cfg.cls = cls;
    return qptas(g, w, cfg);
}

}  // namespace mwis
