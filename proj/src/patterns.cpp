#include "mwis/patterns.hpp"

#include <algorithm>
#include <functional>

namespace mwis {

GraphClass GraphClass::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("class must look like kind:arg, got '" + text + "'");
    std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    if (kind == "hfree") return explicit_h(load_graph(arg).graph);
    int t = 0;
    try {
        std::size_t pos;
        t = std::stoi(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad class parameter '" + arg + "'");
    }
    if (t < 1) throw std::invalid_argument("class parameter must be positive");
    if (kind == "pt") return pt(t);
    if (kind == "hole") return hole(t);
    if (kind == "claw") return claw(t);
    if (kind == "lobster") return lobster(t);
    throw std::invalid_argument("unknown class kind '" + kind + "'");
}

std::string GraphClass::name() const {
    switch (kind) {
        case Kind::Pt: return "pt:" + std::to_string(t);
        case Kind::CgeT: return "hole:" + std::to_string(t);
        case Kind::YgeT: return "claw:" + std::to_string(t);
        case Kind::LgeT: return "lobster:" + std::to_string(t);
        case Kind::ExplicitH: return "hfree:" + std::to_string(h.n()) + "v" + std::to_string(h.m()) + "e";
    }
    return "?";
}

std::optional<std::vector<Vertex>> find_induced_copy(const Graph& g, const Graph& pattern, int pattern_cap) {
    int k = pattern.n();
    if (k > pattern_cap) throw CapExceeded("find_induced_copy: pattern has " + std::to_string(k) + " vertices");
    if (k == 0) return std::vector<Vertex>{};
    // BFS order over the pattern keeps candidates adjacent to something placed
    std::vector<Vertex> order;
    std::vector<char> seen(k, 0);
    for (Vertex s = 0; s < k; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            Vertex x = order[head++];
            for (Vertex y : pattern.neighbors(x))
                if (!seen[y]) seen[y] = 1, order.push_back(y);
        }
    }
    std::vector<Vertex> map(k, -1);
    VertexSet used(g.n());
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        Vertex p = order[i];
        for (Vertex h = 0; h < g.n(); ++h) {
            if (used.contains(h) || g.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                Vertex q = order[j];
                ok = pattern.adjacent(p, q) == g.adjacent(h, map[q]);
            }
            if (!ok) continue;
            map[p] = h;
            used.insert(h);
            if (place(i + 1)) return true;
            used.erase(h);
            map[p] = -1;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

namespace {

// Grows induced trees one leaf at a time: a new vertex must see exactly one placed vertex.
struct Grower {
    const Graph& g;
    VertexSet placed;
    explicit Grower(const Graph& graph) : g(graph), placed(graph.n()) {}

    bool attachable(Vertex v, Vertex anchor) const {
        if (placed.contains(v)) return false;
        for (Vertex u : g.neighbors(v))
            if (placed.contains(u) && u != anchor) return false;
        return true;
    }

    // extend a leg from `end` by exactly `len` vertices, then call `done(last)`
    bool leg(Vertex end, int len, const std::function<bool(Vertex)>& done) {
        if (len == 0) return done(end);
        for (Vertex v : g.neighbors(end)) {
            if (!attachable(v, end)) continue;
            placed.insert(v);
            if (leg(v, len - 1, done)) return true;
            placed.erase(v);
        }
        return false;
    }

    // as leg(), but call `done` at every length >= min_len
    bool leg_at_least(Vertex end, int min_len, const std::function<bool(Vertex)>& done) {
        if (min_len <= 0 && done(end)) return true;
        for (Vertex v : g.neighbors(end)) {
            if (!attachable(v, end)) continue;
            placed.insert(v);
            if (leg_at_least(v, min_len - 1, done)) return true;
            placed.erase(v);
        }
        return false;
    }
};

FreenessResult find_path(const Graph& g, int t) {
    Grower gr(g);
    for (Vertex s = 0; s < g.n(); ++s) {
        gr.placed = g.empty_set();
        gr.placed.insert(s);
        if (gr.leg(s, t - 1, [](Vertex) { return true; })) return {false, gr.placed.to_vector()};
    }
    return {};
}

FreenessResult find_hole(const Graph& g, int t) {
    int need = std::max(t, 3);
    VertexSet placed(g.n());
    std::vector<Vertex> result;
    std::function<bool(Vertex, Vertex, int)> walk = [&](Vertex s, Vertex end, int len) -> bool {
        for (Vertex v : g.neighbors(end)) {
            if (v <= s || placed.contains(v)) continue;
            bool sees_s = false, bad = false;
            for (Vertex u : g.neighbors(v)) {
                if (!placed.contains(u) || u == end) continue;
                if (u == s && len >= 2) sees_s = true;
                else bad = true;
            }
            if (bad) continue;
            if (sees_s) {
                if (len + 1 >= need) {
                    placed.insert(v);
                    result = placed.to_vector();
                    return true;
                }
                continue;
            }
            placed.insert(v);
            if (walk(s, v, len + 1)) return true;
            placed.erase(v);
        }
        return false;
    };
    for (Vertex s = 0; s < g.n(); ++s) {
        placed = g.empty_set();
        placed.insert(s);
        if (walk(s, s, 1)) return {false, result};
    }
    return {};
}

FreenessResult find_claw_copy(const Graph& g, int t) {
    Grower gr(g);
    auto yes = [](Vertex) { return true; };
    for (Vertex c = 0; c < g.n(); ++c) {
        if (g.degree(c) < 3) continue;
        gr.placed = g.empty_set();
        gr.placed.insert(c);
        bool ok = gr.leg(c, t, [&](Vertex) {
            return gr.leg(c, t, [&](Vertex) { return gr.leg(c, t, yes); });
        });
        if (ok) return {false, gr.placed.to_vector()};
    }
    return {};
}

FreenessResult find_lobster_copy(const Graph& g, int t) {
    Grower gr(g);
    auto yes = [](Vertex) { return true; };
    for (Vertex x = 0; x < g.n(); ++x) {
        if (g.degree(x) < 3) continue;
        gr.placed = g.empty_set();
        gr.placed.insert(x);
        bool ok = gr.leg_at_least(x, t, [&](Vertex y) {
            if (g.degree(y) < 3) return false;
            return gr.leg_at_least(y, t, [&](Vertex z) {
                if (g.degree(z) < 3) return false;
                return gr.leg(x, t, [&](Vertex) {
                    return gr.leg(x, t, [&](Vertex) {
                        return gr.leg(y, t, [&](Vertex) {
                            return gr.leg(z, t, [&](Vertex) { return gr.leg(z, t, yes); });
                        });
                    });
                });
            });
        });
        if (ok) return {false, gr.placed.to_vector()};
    }
    return {};
}

}  // namespace

FreenessResult freeness_check(const Graph& g, const GraphClass& cls) {
    switch (cls.kind) {
        case GraphClass::Kind::Pt: return find_path(g, cls.t);
        case GraphClass::Kind::CgeT: return find_hole(g, cls.t);
        case GraphClass::Kind::YgeT: return find_claw_copy(g, cls.t);
        case GraphClass::Kind::LgeT: return find_lobster_copy(g, cls.t);
        case GraphClass::Kind::ExplicitH: {
            auto copy = find_induced_copy(g, cls.h);
            if (!copy) return {};
            auto w = *copy;
            std::sort(w.begin(), w.end());
            return {false, w};
        }
    }
    return {};
}

namespace {

struct TreeShape {
    bool tree = false;
    std::vector<int> deg;  // degree inside G[S], indexed by vertex
};

TreeShape shape_of(const Graph& g, const VertexSet& s) {
    TreeShape out;
    out.deg.assign(g.n(), 0);
    long long edges = 0;
    s.for_each([&](Vertex v) {
        for (Vertex u : g.neighbors(v))
            if (s.contains(u)) ++out.deg[v], ++edges;
    });
    edges /= 2;
    out.tree = !s.empty() && edges == s.size() - 1 && is_connected(g, s);
    return out;
}

// lengths of the maximal degree-2 chains between branch/leaf vertices
std::vector<int> segment_lengths(const Graph& g, const VertexSet& s, const std::vector<int>& deg) {
    std::vector<int> lens;
    s.for_each([&](Vertex v) {
        if (deg[v] == 2) return;
        for (Vertex first : g.neighbors(v)) {
            if (!s.contains(first)) continue;
            Vertex prev = v, cur = first;
            int len = 1;
            while (deg[cur] == 2) {
                Vertex next = -1;
                for (Vertex u : g.neighbors(cur))
                    if (s.contains(u) && u != prev) next = u;
                prev = cur, cur = next, ++len;
            }
            if (v < cur) lens.push_back(len);
        }
    });
    return lens;
}

}  // namespace

bool is_tree(const Graph& g, const VertexSet& s) { return shape_of(g, s).tree; }

bool is_induced_path(const Graph& g, const VertexSet& s) {
    auto sh = shape_of(g, s);
    if (!sh.tree) return false;
    bool ok = true;
    s.for_each([&](Vertex v) { ok = ok && sh.deg[v] <= 2; });
    return ok;
}

bool is_induced_cycle(const Graph& g, const VertexSet& s) {
    if (s.size() < 3 || !is_connected(g, s)) return false;
    bool ok = true;
    s.for_each([&](Vertex v) {
        int d = 0;
        for (Vertex u : g.neighbors(v)) d += s.contains(u);
        ok = ok && d == 2;
    });
    return ok;
}

Vertex claw_center(const Graph& g, const VertexSet& s, int t) {
    auto sh = shape_of(g, s);
    if (!sh.tree) return -1;
    Vertex center = -1;
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (sh.deg[v] > 3 || (sh.deg[v] == 3 && center >= 0)) ok = false;
        if (sh.deg[v] == 3) center = v;
    });
    if (!ok || center < 0) return -1;
    auto lens = segment_lengths(g, s, sh.deg);
    if (lens.size() != 3) return -1;
    for (int l : lens)
        if (l < t) return -1;
    return center;
}

bool is_lobster(const Graph& g, const VertexSet& s, int t) {
    auto sh = shape_of(g, s);
    if (!sh.tree) return false;
    int branch = 0;
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (sh.deg[v] == 3) ++branch;
        else if (sh.deg[v] > 3) ok = false;
    });
    if (!ok || branch != 3) return false;
    auto lens = segment_lengths(g, s, sh.deg);
    if (lens.size() != 7) return false;
    for (int l : lens)
        if (l < t) return false;
    return true;
}

}  // namespace mwis
