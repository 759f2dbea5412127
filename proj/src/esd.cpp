#include "mwis/esd.hpp"

#include <algorithm>
#include <functional>

namespace mwis {

int Esd::universe() const {
    if (!eta_vertex.empty()) return eta_vertex.front().universe();
    if (!eta_edge.empty()) return eta_edge.front().all.universe();
    return 0;
}

int Esd::edge_index(Vertex a, Vertex b) const {
    auto key = std::minmax(a, b);
    const auto& es = pattern.edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::pair<Vertex, Vertex>(key.first, key.second));
    if (it == es.end() || *it != std::pair<Vertex, Vertex>(key.first, key.second)) return -1;
    return static_cast<int>(it - es.begin());
}

VertexSet Esd::domain() const {
    VertexSet out(universe());
    for (auto& s : eta_vertex) out |= s;
    for (auto& e : eta_edge) out |= e.all;
    for (auto& t : triangles) out |= t.set;
    return out;
}

Esd empty_esd(const Graph& pattern, int universe) {
    Esd d;
    d.pattern = pattern;
    d.eta_vertex.assign(pattern.n(), VertexSet(universe));
    d.eta_edge.assign(pattern.m(), {VertexSet(universe), VertexSet(universe), VertexSet(universe)});
    for (auto [a, b] : pattern.edges())
        for (Vertex c : pattern.neighbors(b))
            if (c > b && pattern.adjacent(a, c)) d.triangles.push_back({{a, b, c}, VertexSet(universe)});
    std::sort(d.triangles.begin(), d.triangles.end(), [](auto& x, auto& y) { return x.h < y.h; });
    return d;
}

Esd trivial_esd(const Graph& g, const VertexSet& scope) {
    auto comps = components(g, scope);
    Esd d = empty_esd(Graph(static_cast<int>(comps.size())), g.n());
    for (std::size_t i = 0; i < comps.size(); ++i) d.eta_vertex[i] = comps[i];
    return d;
}

Esd trivial_esd(const Graph& g) { return trivial_esd(g, g.all()); }

namespace {

const VertexSet& end_at(const Esd& d, int e, Vertex h) {
    return d.pattern.edges()[e].first == h ? d.eta_edge[e].end_u : d.eta_edge[e].end_v;
}

// Which part of the partition a vertex lies in.
struct Owner {
    enum Kind { None, HVertex, Edge, Tri } kind = None;
    int index = -1;
};

}  // namespace

EsdReport validate_esd(const Graph& g, const Esd& d, const VertexSet& scope) {
    EsdReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int n = g.n();
    const Graph& h = d.pattern;
    if (static_cast<int>(d.eta_vertex.size()) != h.n() || static_cast<int>(d.eta_edge.size()) != h.m()) {
        fail("eta arrays do not match the pattern graph");
        return rep;
    }
    auto check_universe = [&](const VertexSet& s, const std::string& what) {
        if (s.universe() != n) fail(what + " has the wrong universe");
    };
    for (int i = 0; i < h.n(); ++i) check_universe(d.eta_vertex[i], "eta(v" + std::to_string(i) + ")");
    for (int e = 0; e < h.m(); ++e) {
        check_universe(d.eta_edge[e].all, "eta(e)");
        check_universe(d.eta_edge[e].end_u, "eta(e,u)");
        check_universe(d.eta_edge[e].end_v, "eta(e,v)");
    }
    for (auto& t : d.triangles) check_universe(t.set, "eta(T)");
    if (!rep.ok) return rep;

    std::size_t expected_tris = empty_esd(h, n).triangles.size();
    if (d.triangles.size() != expected_tris) fail("triangle list does not match the triangles of H");

    // (1) partition
    std::vector<Owner> owner(n);
    auto claim = [&](const VertexSet& s, Owner::Kind kind, int idx, const std::string& what) {
        s.for_each([&](Vertex x) {
            if (!scope.contains(x)) fail(what + " contains vertex " + std::to_string(x) + " outside the graph");
            else if (owner[x].kind != Owner::None) fail("vertex " + std::to_string(x) + " lies in two parts");
            else owner[x] = {kind, idx};
        });
    };
    for (int i = 0; i < h.n(); ++i) claim(d.eta_vertex[i], Owner::HVertex, i, "eta(v" + std::to_string(i) + ")");
    for (int e = 0; e < h.m(); ++e) {
        const auto& es = d.eta_edge[e];
        claim(es.all, Owner::Edge, e, "eta(e" + std::to_string(e) + ")");
        if (!es.end_u.subset_of(es.all) || !es.end_v.subset_of(es.all))
            fail("edge end sets of e" + std::to_string(e) + " are not inside eta(e)");
    }
    for (std::size_t i = 0; i < d.triangles.size(); ++i)
        claim(d.triangles[i].set, Owner::Tri, static_cast<int>(i), "eta(T" + std::to_string(i) + ")");
    scope.for_each([&](Vertex x) {
        if (owner[x].kind == Owner::None) fail("vertex " + std::to_string(x) + " is not covered");
    });

    // (2) ends at a common H-vertex are complete to each other
    for (Vertex v = 0; v < h.n(); ++v) {
        const auto& nb = h.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int e1 = d.edge_index(v, nb[i]), e2 = d.edge_index(v, nb[j]);
                const auto& s1 = end_at(d, e1, v);
                const auto& s2 = end_at(d, e2, v);
                s1.for_each([&](Vertex x) {
                    s2.for_each([&](Vertex y) {
                        if (!g.adjacent(x, y))
                            fail("ends at h" + std::to_string(v) + " not complete: " + std::to_string(x) + "-" +
                                 std::to_string(y) + " missing");
                    });
                });
            }
    }

    // (3) every edge is internal or of a permitted kind
    auto in_end = [&](Vertex x, int e, Vertex hv) { return end_at(d, e, hv).contains(x); };
    auto permitted = [&](Vertex x, Vertex y) {
        const Owner &ox = owner[x], &oy = owner[y];
        if (ox.kind == oy.kind && ox.index == oy.index) return true;
        if (ox.kind == Owner::Edge && oy.kind == Owner::Edge) {
            auto [a, b] = h.edges()[ox.index];
            for (Vertex hv : {a, b}) {
                auto [c, dd] = h.edges()[oy.index];
                if ((hv == c || hv == dd) && in_end(x, ox.index, hv) && in_end(y, oy.index, hv)) return true;
            }
            return false;
        }
        if (ox.kind == Owner::HVertex && oy.kind == Owner::Edge) {
            auto [a, b] = h.edges()[oy.index];
            return (a == ox.index || b == ox.index) && in_end(y, oy.index, ox.index);
        }
        if (ox.kind == Owner::Tri && oy.kind == Owner::Edge) {
            auto [a, b] = h.edges()[oy.index];
            const auto& tri = d.triangles[ox.index].h;
            bool in_tri = std::find(tri.begin(), tri.end(), a) != tri.end() &&
                          std::find(tri.begin(), tri.end(), b) != tri.end();
            return in_tri && in_end(y, oy.index, a) && in_end(y, oy.index, b);
        }
        return false;
    };
    if (rep.ok)
        for (auto [x, y] : g.edges()) {
            if (!scope.contains(x) || !scope.contains(y)) continue;
            if (!permitted(x, y) && !permitted(y, x))
                fail("edge " + std::to_string(x) + "-" + std::to_string(y) + " is not of a permitted type");
        }
    return rep;
}

EsdReport validate_esd(const Graph& g, const Esd& d) { return validate_esd(g, d, g.all()); }

std::string atom_name(const Esd& d, const Atom& a) {
    auto edge = [&](int e) {
        auto [u, v] = d.pattern.edges()[e];
        return std::to_string(u) + "-" + std::to_string(v);
    };
    switch (a.kind) {
        case Atom::Kind::EdgeBot: return "A[" + edge(a.index) + "]bot";
        case Atom::Kind::EdgeU: return "A[" + edge(a.index) + "]u";
        case Atom::Kind::EdgeV: return "A[" + edge(a.index) + "]v";
        case Atom::Kind::EdgeFull: return "A[" + edge(a.index) + "]uv";
        case Atom::Kind::Vertex: return "A[" + std::to_string(a.index) + "]";
        case Atom::Kind::Triangle: {
            auto& t = d.triangles[a.index].h;
            return "A[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "]";
        }
    }
    return "?";
}

std::vector<Atom> atoms(const Graph& g, const Esd& d) {
    std::vector<Atom> out;
    const Graph& h = d.pattern;
    std::vector<std::vector<int>> tris_of_edge(h.m());
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
        auto& t = d.triangles[i].h;
        tris_of_edge[d.edge_index(t[0], t[1])].push_back(static_cast<int>(i));
        tris_of_edge[d.edge_index(t[0], t[2])].push_back(static_cast<int>(i));
        tris_of_edge[d.edge_index(t[1], t[2])].push_back(static_cast<int>(i));
    }
    for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edges()[e];
        const auto& es = d.eta_edge[e];
        VertexSet full = d.eta_vertex[u] | d.eta_vertex[v] | es.all;
        for (int ti : tris_of_edge[e]) full |= d.triangles[ti].set;
        out.push_back({Atom::Kind::EdgeBot, e, es.all - (es.end_u | es.end_v)});
        out.push_back({Atom::Kind::EdgeU, e, d.eta_vertex[u] | (es.all - es.end_v)});
        out.push_back({Atom::Kind::EdgeV, e, d.eta_vertex[v] | (es.all - es.end_u)});
        out.push_back({Atom::Kind::EdgeFull, e, full});
    }
    VertexSet dom = d.domain();
    for (Vertex v = 0; v < h.n(); ++v) {
        Atom a{Atom::Kind::Vertex, v, d.eta_vertex[v]};
        if (h.degree(v) == 0 && a.vertices.size() == 1) {
            a.trivial = true;
            for (Vertex y : g.neighbors(a.vertices.first()))
                if (dom.contains(y)) a.trivial = false;
        }
        out.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < d.triangles.size(); ++i)
        out.push_back({Atom::Kind::Triangle, static_cast<int>(i), d.triangles[i].set});
    return out;
}

namespace {

// H-vertices at which an edge atom "sits" (for cases (ii) and (iii)).
std::vector<Vertex> sides(const Atom& a, const Esd& d) {
    auto [u, v] = d.pattern.edges()[a.index];
    switch (a.kind) {
        case Atom::Kind::EdgeU: return {u};
        case Atom::Kind::EdgeV: return {v};
        case Atom::Kind::EdgeFull: return {u, v};
        default: return {};
    }
}

bool is_edge_atom(const Atom& a) { return a.kind <= Atom::Kind::EdgeFull; }

bool conflicts_ordered(const Atom& a, const Atom& b, const Esd& d) {
    if (is_edge_atom(a) && is_edge_atom(b)) {
        if (a.index == b.index) return a.kind != b.kind;
        for (Vertex x : sides(a, d))
            for (Vertex y : sides(b, d))
                if (x == y) return true;
        return false;
    }
    if (is_edge_atom(a) && b.kind == Atom::Kind::Vertex) {
        for (Vertex x : sides(a, d))
            if (x == b.index) return true;
        return false;
    }
    if (a.kind == Atom::Kind::EdgeFull && b.kind == Atom::Kind::Triangle) {
        auto [u, v] = d.pattern.edges()[a.index];
        auto& t = d.triangles[b.index].h;
        return std::find(t.begin(), t.end(), u) != t.end() && std::find(t.begin(), t.end(), v) != t.end();
    }
    return false;
}

}  // namespace

bool conflicts(const Atom& a, const Atom& b, const Esd& d) {
    if (a.kind == b.kind && a.index == b.index) return false;
    return conflicts_ordered(a, b, d) || conflicts_ordered(b, a, d);
}

std::vector<int> atom_family_of_independent_set(const Graph& g, const Esd& d, const std::vector<Atom>& all_atoms,
                                                const VertexSet& independent) {
    if (!is_independent(g, independent)) throw std::invalid_argument("atom family: set is not independent");
    const Graph& h = d.pattern;
    std::vector<int> fam;
    std::vector<char> blocked(h.n(), 0);  // I meets eta(e,v) for some e at v
    for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edges()[e];
        bool mu = d.eta_edge[e].end_u.intersects(independent);
        bool mv = d.eta_edge[e].end_v.intersects(independent);
        int kind = mu && mv ? 3 : mu ? 1 : mv ? 2 : 0;
        fam.push_back(4 * e + kind);
        if (mu) blocked[u] = 1;
        if (mv) blocked[v] = 1;
    }
    int base = 4 * h.m();
    for (Vertex v = 0; v < h.n(); ++v)
        if (!blocked[v]) fam.push_back(base + v);
    base += h.n();
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
        auto& t = d.triangles[i].h;
        bool ok = true;
        for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
            int e = d.edge_index(a, b);
            if (d.eta_edge[e].end_u.intersects(independent) && d.eta_edge[e].end_v.intersects(independent))
                ok = false;
        }
        if (ok) fam.push_back(base + static_cast<int>(i));
    }
    VertexSet covered(g.n());
    for (int i : fam) covered |= all_atoms[i].vertices;
    if (!independent.subset_of(covered)) throw std::logic_error("atom family does not cover the independent set");
    if (!family_is_independent(all_atoms, fam, d)) throw std::logic_error("atom family is not independent");
    return fam;
}

bool family_is_independent(const std::vector<Atom>& all_atoms, const std::vector<int>& family, const Esd& d) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j] || conflicts(all_atoms[family[i]], all_atoms[family[j]], d)) return false;
    return true;
}

Esd restrict_esd(const Esd& d, const VertexSet& removed) {
    Esd out = d;
    for (auto& s : out.eta_vertex) s -= removed;
    for (auto& e : out.eta_edge) {
        e.all -= removed;
        e.end_u -= removed;
        e.end_v -= removed;
    }
    for (auto& t : out.triangles) t.set -= removed;
    return out;
}

Esd pad_with_components(const Esd& d, const Graph& g, const VertexSet& extra) {
    auto comps = components(g, extra);
    int k = d.pattern.n(), add = static_cast<int>(comps.size());
    Graph h(k + add, d.pattern.edges());
    Esd out = empty_esd(h, g.n());
    for (int i = 0; i < k; ++i) out.eta_vertex[i] = d.eta_vertex[i];
    out.eta_edge = d.eta_edge;
    for (std::size_t i = 0; i < d.triangles.size(); ++i) out.triangles[i].set = d.triangles[i].set;
    for (int i = 0; i < add; ++i) out.eta_vertex[k + i] = comps[i];
    return out;
}

VertexSet peripheral_vertices(const Graph& g, const Esd& d) {
    VertexSet out(g.n());
    for (Vertex w = 0; w < d.pattern.n(); ++w) {
        if (d.pattern.degree(w) != 1) continue;
        int e = d.edge_index(w, d.pattern.neighbors(w)[0]);
        const auto& s = end_at(d, e, w);
        if (s.size() == 1) out.insert(s.first());
    }
    return out;
}

Esd lift_esd(const Esd& d, const Subgraph& sub, int parent_universe) {
    Esd out = empty_esd(d.pattern, parent_universe);
    auto up = [&](const VertexSet& s) { return sub.lift(s, parent_universe); };
    for (std::size_t i = 0; i < d.eta_vertex.size(); ++i) out.eta_vertex[i] = up(d.eta_vertex[i]);
    for (std::size_t e = 0; e < d.eta_edge.size(); ++e)
        out.eta_edge[e] = {up(d.eta_edge[e].all), up(d.eta_edge[e].end_u), up(d.eta_edge[e].end_v)};
    for (std::size_t t = 0; t < d.triangles.size(); ++t) out.triangles[t].set = up(d.triangles[t].set);
    return out;
}

// edgeless pattern whose parts are exactly the components of the domain
bool is_trivial_esd(const Graph& g, const Esd& d) {
    if (d.pattern.m() != 0) return false;
    for (const auto& s : d.eta_vertex)
        if (s.empty() || !is_connected(g, s)) return false;
    return true;
}

bool shatters(const Graph& g, const Esd& d, const std::array<Vertex, 3>& z, int cap) {
    VertexSet dom = d.domain();
    if (dom.size() > cap) throw CapExceeded("shatters: graph has " + std::to_string(dom.size()) + " vertices");
    for (Vertex x : z)
        if (!dom.contains(x)) throw std::invalid_argument("shatters: Z vertex outside the decomposed graph");
    auto all_atoms = atoms(g, d);
    struct PathInfo {
        VertexSet verts, closed;
    };
    for (const auto& a : all_atoms) {
        if (a.vertices.empty()) continue;
        VertexSet target = closed_neighborhood(g, a.vertices) & dom;
        // minimal witnesses: induced paths from z that touch N[A] only at their last vertex
        std::array<std::vector<PathInfo>, 3> paths;
        for (int i = 0; i < 3; ++i) {
            VertexSet cur(g.n());
            std::function<void(Vertex)> walk = [&](Vertex end) {
                if (target.contains(end)) {
                    paths[i].push_back({cur, closed_neighborhood(g, cur)});
                    return;
                }
                for (Vertex v : g.neighbors(end)) {
                    if (!dom.contains(v) || cur.contains(v)) continue;
                    bool induced = true;
                    for (Vertex u : g.neighbors(v))
                        if (u != end && cur.contains(u)) induced = false;
                    if (!induced) continue;
                    cur.insert(v);
                    walk(v);
                    cur.erase(v);
                }
            };
            cur.insert(z[i]);
            walk(z[i]);
        }
        for (auto& p1 : paths[0])
            for (auto& p2 : paths[1]) {
                if (p1.closed.intersects(p2.verts)) continue;
                for (auto& p3 : paths[2])
                    if (!p1.closed.intersects(p3.verts) && !p2.closed.intersects(p3.verts)) return false;
            }
    }
    return true;
}

nlohmann::json esd_to_json(const Esd& d) {
    using nlohmann::json;
    json edges = json::array(), eta_edges = json::array(), verts = json::array(), tris = json::array();
    for (auto [u, v] : d.pattern.edges()) edges.push_back({u, v});
    for (auto& s : d.eta_vertex) verts.push_back(s.to_vector());
    for (auto& e : d.eta_edge)
        eta_edges.push_back({{"all", e.all.to_vector()}, {"end_u", e.end_u.to_vector()}, {"end_v", e.end_v.to_vector()}});
    for (auto& t : d.triangles) tris.push_back({{"h", t.h}, {"set", t.set.to_vector()}});
    return {{"pattern", {{"n", d.pattern.n()}, {"edges", edges}}},
            {"eta", {{"vertices", verts}, {"edges", eta_edges}, {"triangles", tris}}}};
}

Esd esd_from_json(const nlohmann::json& j, int universe) {
    try {
        int k = j.at("pattern").at("n").get<int>();
        std::vector<std::pair<Vertex, Vertex>> hedges;
        for (auto& e : j.at("pattern").at("edges")) hedges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Esd d = empty_esd(Graph(k, hedges), universe);
        auto to_set = [&](const nlohmann::json& arr) {
            VertexSet s(universe);
            for (auto& x : arr) {
                int v = x.get<int>();
                if (v < 0 || v >= universe) throw std::invalid_argument("ESD vertex out of range");
                s.insert(v);
            }
            return s;
        };
        const auto& eta = j.at("eta");
        if (eta.contains("vertices")) {
            const auto& vs = eta.at("vertices");
            if (static_cast<int>(vs.size()) != k) throw std::invalid_argument("eta.vertices must have pattern.n entries");
            for (int i = 0; i < k; ++i) d.eta_vertex[i] = to_set(vs[i]);
        }
        if (eta.contains("edges")) {
            const auto& es = eta.at("edges");
            if (es.size() != hedges.size()) throw std::invalid_argument("eta.edges must align with pattern.edges");
            for (std::size_t i = 0; i < hedges.size(); ++i) {
                auto [a, b] = hedges[i];
                int idx = d.edge_index(a, b);
                auto& dst = d.eta_edge[idx];
                dst.all = to_set(es[i].at("all"));
                auto eu = to_set(es[i].value("end_u", nlohmann::json::array()));
                auto ev = to_set(es[i].value("end_v", nlohmann::json::array()));
                if (a > b) std::swap(eu, ev);
                dst.end_u = eu;
                dst.end_v = ev;
            }
        }
        if (eta.contains("triangles"))
            for (auto& t : eta.at("triangles")) {
                std::array<Vertex, 3> h = t.at("h").get<std::array<Vertex, 3>>();
                std::sort(h.begin(), h.end());
                auto it = std::find_if(d.triangles.begin(), d.triangles.end(), [&](auto& x) { return x.h == h; });
                if (it == d.triangles.end()) throw std::invalid_argument("eta.triangles names a non-triangle of H");
                it->set = to_set(t.at("set"));
            }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed ESD JSON: ") + e.what());
    }
}

}  // namespace mwis
