#include "mwis/pathfinder.hpp"

#include <algorithm>
#include <set>

namespace mwis {

VertexSet path_set(const Graph& g, const Path& q) { return VertexSet(g.n(), q); }

Weight max_component_weight(const Graph& g, const WeightFn& w, const VertexSet& scope) {
    Weight best = 0;
    for (auto& c : components(g, scope)) best = std::max(best, weight_of(w, c));
    return best;
}

VertexSet gyarfas_level(const Graph& g, Vertex u, const Path& q, int i) {
    if (i == 0) {
        VertexSet s = g.all();
        s.erase(u);
        return s;
    }
    Path prefix(q.begin(), q.begin() + i);
    return g.all() - closed_neighborhood(g, path_set(g, prefix));
}

namespace {

void require_connected(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.n()) throw std::invalid_argument("gyarfas: start vertex out of range");
    if (!is_connected(g, g.all())) throw std::invalid_argument("gyarfas: graph must be connected");
}

bool adjacent_to_set(const Graph& g, Vertex v, const VertexSet& s) {
    for (Vertex x : g.neighbors(v))
        if (s.contains(x)) return true;
    return false;
}

}  // namespace

std::vector<Path> gyarfas_family(const Graph& g, Vertex u) {
    require_connected(g, u);
    std::vector<Path> out{Path{}};
    std::set<Path> seen{Path{}};
    auto add = [&](const Path& p) {
        if (seen.insert(p).second) out.push_back(p);
    };
    for (Vertex z = 0; z < g.n(); ++z) {
        Path p{u};
        add(p);
        VertexSet blocked = closed_neighborhood(g, u);  // N[v_0..v_i]
        VertexSet level = g.all();                       // G_i for the current i
        level.erase(u);
        while (true) {
            // D: component of G_{i+1} containing z
            if (blocked.contains(z)) break;
            VertexSet d = component_of(g, g.all() - blocked, z);
            Vertex vi = p.back(), next = -1;
            for (Vertex y : g.neighbors(vi))
                if (level.contains(y) && adjacent_to_set(g, y, d)) {
                    next = y;
                    break;
                }
            if (next < 0) break;
            level = g.all() - blocked;
            p.push_back(next);
            add(p);
            for (Vertex x : g.neighbors(next)) blocked.insert(x);
            blocked.insert(next);
        }
    }
    return out;
}

SeparatorCertificate check_gyarfas(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha, const Path& q) {
    SeparatorCertificate c;
    c.path = q;
    c.alpha = alpha;
    const Weight total = weight_of(w, g.all());
    const Ratio keep = Ratio(1) - alpha;
    c.p1 = q.empty() || q.front() == u;
    bool induced = is_induced_path(g, path_set(g, q)) || q.size() <= 1;
    // consecutive vertices must be adjacent for the order to be a path
    for (std::size_t i = 0; i + 1 < q.size(); ++i) induced = induced && g.adjacent(q[i], q[i + 1]);
    c.p1 = c.p1 && induced;
    const int k = static_cast<int>(q.size()) - 1;
    c.p3 = true;
    for (int i = 0; i <= k + 1; ++i) {
        VertexSet level = gyarfas_level(g, u, q, i);
        Weight mx = 0;
        bool heavy_adjacent = false;
        for (auto& comp : components(g, level)) {
            Weight cw = weight_of(w, comp);
            mx = std::max(mx, cw);
            if (i <= k && gt_scaled(cw, keep, total) && adjacent_to_set(g, q[i], comp)) heavy_adjacent = true;
        }
        c.level_max.push_back(mx);
        if (i <= k && !heavy_adjacent) c.p3 = false;
        if (i == k + 1) c.p2 = leq_scaled(mx, keep, total);
    }
    return c;
}

SeparatorCertificate gyarfas_select(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha) {
    if (!(Ratio(0) < alpha && alpha < Ratio(1, 2))) throw std::invalid_argument("gyarfas_select: alpha outside (0,1/2)");
    for (const auto& q : gyarfas_family(g, u)) {
        auto c = check_gyarfas(g, u, w, alpha, q);
        if (c.ok()) return c;
    }
    throw std::logic_error("gyarfas_select: no family member satisfies P1-P3");
}

SeparatorCertificate gyarfas_construct(const Graph& g, Vertex u, const WeightFn& w, Ratio alpha) {
    if (!(Ratio(0) < alpha && alpha < Ratio(1, 2)))
        throw std::invalid_argument("gyarfas_construct: alpha outside (0,1/2)");
    require_connected(g, u);
    const Weight total = weight_of(w, g.all());
    const Ratio keep = Ratio(1) - alpha;
    auto heavy_in = [&](const VertexSet& level) -> VertexSet {
        for (auto& comp : components(g, level))
            if (gt_scaled(weight_of(w, comp), keep, total)) return comp;
        return VertexSet(g.n());
    };
    Path p;
    VertexSet level = g.all();
    level.erase(u);
    VertexSet d = heavy_in(level);
    if (!d.empty()) {
        p.push_back(u);
        VertexSet blocked = closed_neighborhood(g, u);
        while (true) {
            VertexSet next_level = g.all() - blocked;
            VertexSet d2 = heavy_in(next_level);
            if (d2.empty()) break;
            Vertex next = -1;
            for (Vertex y : g.neighbors(p.back()))
                if (d.contains(y) && adjacent_to_set(g, y, d2)) {
                    next = y;
                    break;
                }
            if (next < 0) throw std::logic_error("gyarfas_construct: heavy component lost contact");
            p.push_back(next);
            blocked |= closed_neighborhood(g, next);
            d = d2;
        }
    }
    auto c = check_gyarfas(g, u, w, alpha, p);
    if (!c.ok()) throw std::logic_error("gyarfas_construct: certificate failed");
    return c;
}

std::vector<Path> long_hole_family(const Graph& g, int t, Vertex u) {
    if (t < 4) throw std::invalid_argument("long_hole_family: t must be at least 4");
    std::vector<Path> out;
    std::set<Path> seen;
    auto add = [&](Path p) {
        if (seen.insert(p).second) out.push_back(std::move(p));
    };
    for (const auto& r : gyarfas_family(g, u)) {
        const int len = static_cast<int>(r.size());
        if (len == 0) {
            add(r);
            add(Path{u});
        } else if (len < t) {
            add(r);
        }
        if (len >= t) {
            const int k = len - 1;
            add(Path(r.begin() + (k - t + 1), r.begin() + k));
            add(Path(r.begin() + (k - t + 2), r.end()));
        }
    }
    return out;
}

bool hole_balanced(const Graph& g, const WeightFn& w, const Path& q) {
    const Weight total = weight_of(w, g.all());
    Weight mx = max_component_weight(g, w, g.all() - closed_neighborhood(g, path_set(g, q)));
    return leq_scaled(mx, Ratio(3, 4), total);
}

HoleSeparator long_hole_select(const Graph& g, int t, const WeightFn& w, Vertex u) {
    for (const auto& q : long_hole_family(g, t, u))
        if (hole_balanced(g, w, q))
            return {q, max_component_weight(g, w, g.all() - closed_neighborhood(g, path_set(g, q)))};
    auto witness = freeness_check(g, GraphClass::hole(t));
    throw ClassViolation(witness.free ? "long_hole_select: no balanced member (implementation bug)"
                                      : "long_hole_select: class violation suspected (long hole present)",
                         witness.witness);
}

HoleSeparator long_hole_construct(const Graph& g, int t, const WeightFn& w, Vertex u) {
    auto r = gyarfas_construct(g, u, w, Ratio(1, 4)).path;
    std::vector<Path> cands;
    const int len = static_cast<int>(r.size());
    if (len == 0) cands.push_back({u});
    else if (len < t) cands.push_back(r);
    else {
        const int k = len - 1;
        cands.emplace_back(r.begin() + (k - t + 1), r.begin() + k);
        cands.emplace_back(r.begin() + (k - t + 2), r.end());
    }
    for (auto& q : cands)
        if (hole_balanced(g, w, q))
            return {q, max_component_weight(g, w, g.all() - closed_neighborhood(g, path_set(g, q)))};
    throw ClassViolation("long_hole_construct: class violation suspected (no balanced subpath)", {});
}

}  // namespace mwis
