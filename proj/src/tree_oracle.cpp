#include "mwis/tree_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace mwis {

FamilyEntry trivial_entry(const Graph& g, const VertexSet& x, std::string origin) {
    return {x, trivial_esd(g, g.all() - x), true, std::move(origin)};
}

FamilyEntry lift_entry(const FamilyEntry& e, const Subgraph& sub, int parent_universe) {
    return {sub.lift(e.x, parent_universe), lift_esd(e.esd, sub, parent_universe), e.trivial, e.origin};
}

std::optional<VertexSet> find_induced_tree(const Graph& g, const VertexSet& scope, const std::array<Vertex, 3>& z,
                                           int cap) {
    for (Vertex x : z)
        if (!scope.contains(x)) throw std::invalid_argument("find_induced_tree: Z vertex outside the graph");
    VertexSet comp = component_of(g, scope, z[0]);
    if (!comp.contains(z[1]) || !comp.contains(z[2])) return std::nullopt;
    if (comp.size() > cap)
        throw CapExceeded("find_induced_tree: component has " + std::to_string(comp.size()) + " vertices");
    std::vector<VertexSet> level{VertexSet(g.n(), {z[0]})};
    while (!level.empty()) {
        std::optional<VertexSet> best;
        for (const auto& s : level)
            if (s.contains(z[1]) && s.contains(z[2]) && (!best || s < *best)) best = s;
        if (best) return best;
        std::unordered_set<VertexSet, VertexSetHash> next;
        for (const auto& s : level) {
            VertexSet frontier = open_neighborhood(g, s) & comp;
            frontier.for_each([&](Vertex y) {
                int touching = 0;
                for (Vertex x : g.neighbors(y))
                    if (s.contains(x)) ++touching;
                if (touching != 1) return;
                VertexSet grown = s;
                grown.insert(y);
                next.insert(std::move(grown));
            });
        }
        level.assign(next.begin(), next.end());
    }
    return std::nullopt;
}

std::optional<VertexSet> find_induced_tree(const Graph& g, const std::array<Vertex, 3>& z, int cap) {
    return find_induced_tree(g, g.all(), z, cap);
}

TreeOrEsd claw_shatter(const Graph& g, const VertexSet& scope, const std::array<Vertex, 3>& z,
                       const std::optional<Esd>& external, int cap) {
    if (z[0] == z[1] || z[0] == z[2] || z[1] == z[2]) throw std::invalid_argument("claw_shatter: |Z| must be 3");
    for (Vertex x : z)
        if (!scope.contains(x)) throw std::invalid_argument("claw_shatter: Z vertex outside the graph");
    TreeOrEsd out;
    VertexSet comp = component_of(g, scope, z[0]);
    if (!comp.contains(z[1]) || !comp.contains(z[2])) {
        out.kind = TreeOrEsd::Kind::Decomposition;
        out.esd = trivial_esd(g, scope);
        return out;
    }
    if (auto tree = find_induced_tree(g, comp, z, cap)) {
        out.kind = TreeOrEsd::Kind::Tree;
        out.tree = *tree;
        return out;
    }
    if (external) {
        Esd d = *external;
        VertexSet dom = d.domain();
        if (dom == comp && !(comp == scope)) d = pad_with_components(d, g, scope - comp);
        else if (!(dom == scope)) throw std::invalid_argument("claw_shatter: external ESD does not decompose the graph");
        auto rep = validate_esd(g, d, scope);
        if (!rep.ok) throw std::invalid_argument("claw_shatter: external ESD invalid: " + rep.violations.front());
        if (!shatters(g, d, z, cap)) throw std::invalid_argument("claw_shatter: external ESD does not shatter Z");
        out.kind = TreeOrEsd::Kind::Decomposition;
        out.esd = std::move(d);
        return out;
    }
    out.reason = "three-in-a-tree constructive step unavailable";
    return out;
}

TreeOrEsd claw_shatter(const Graph& g, const std::array<Vertex, 3>& z, const std::optional<Esd>& external, int cap) {
    return claw_shatter(g, g.all(), z, external, cap);
}

namespace {

// Dedupes entries and validates them on the way in.
struct EntrySink {
    const Graph& g;
    bool validate;
    std::vector<FamilyEntry>& out;
    std::set<std::string> seen;

    void add(FamilyEntry e) {
        std::string key;
        for (Vertex v : e.x.to_vector()) key += std::to_string(v) + ",";
        if (!e.trivial) key += "|" + esd_to_json(e.esd).dump();
        if (!seen.insert(key).second) return;
        if (validate) {
            auto rep = validate_esd(g, e.esd, g.all() - e.x);
            if (!rep.ok) throw std::logic_error("family entry (" + e.origin + ") invalid: " + rep.violations.front());
        }
        out.push_back(std::move(e));
    }
};

// ESD of G - X built from an ESD whose domain may still contain some of X.
FamilyEntry make_entry(const Graph& g, const VertexSet& x, const Esd& d, std::string origin) {
    if (d.pattern.m() == 0) return trivial_entry(g, x, std::move(origin));
    return {x, restrict_esd(d, x), false, std::move(origin)};
}

VertexSet prune_to(const Graph& g, VertexSet s, const std::array<Vertex, 3>& keep) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : s.to_vector()) {
            if (v == keep[0] || v == keep[1] || v == keep[2]) continue;
            int deg = 0;
            for (Vertex x : g.neighbors(v))
                if (s.contains(x)) ++deg;
            if (deg <= 1) {
                s.erase(v);
                changed = true;
            }
        }
    }
    return s;
}

VertexSet seg(const Graph& g, const Path& q, int from, int to) {
    VertexSet s(g.n());
    for (int i = from; i <= to; ++i) s.insert(q[i]);
    return s;
}

std::vector<int> distances_within(const Graph& g, const VertexSet& s, Vertex src, std::vector<Vertex>* parent) {
    std::vector<int> dist(g.n(), -1);
    if (parent) parent->assign(g.n(), -1);
    std::deque<Vertex> dq{src};
    dist[src] = 0;
    while (!dq.empty()) {
        Vertex x = dq.front();
        dq.pop_front();
        for (Vertex y : g.neighbors(x))
            if (s.contains(y) && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (parent) (*parent)[y] = x;
                dq.push_back(y);
            }
    }
    return dist;
}

// Tip of the truncated claw on the leg that holds `start`.
Vertex tip_toward(const Graph& g, const VertexSet& claw, Vertex center, Vertex start, int t) {
    std::vector<Vertex> parent;
    auto dist = distances_within(g, claw, center, &parent);
    if (dist[start] < t) throw std::logic_error("tip_toward: start too close to the center");
    Vertex x = start;
    while (dist[x] > t) x = parent[x];
    return x;
}

}  // namespace

VertexSet truncate_claw(const Graph& g, const VertexSet& claw, Vertex center, int t) {
    auto dist = distances_within(g, claw, center, nullptr);
    VertexSet out(g.n());
    claw.for_each([&](Vertex v) {
        if (dist[v] >= 0 && dist[v] <= t) out.insert(v);
    });
    return out;
}

ClawResult find_claw(const Graph& g, Vertex u, int t, const OracleOptions& opt) {
    if (t < 1) throw std::invalid_argument("find_claw: t must be positive");
    if (u < 0 || u >= g.n()) throw std::invalid_argument("find_claw: u out of range");
    if (!is_connected(g, g.all())) throw std::invalid_argument("find_claw: graph must be connected");
    ClawResult r;
    EntrySink sink{g, opt.validate, r.family, {}};
    sink.add(trivial_entry(g, VertexSet(g.n(), {u}), "X={u}"));
    auto fam = gyarfas_family(g, u);
    r.gyarfas_paths = static_cast<int>(fam.size());
    for (const auto& q : fam) {
        if (q.empty()) continue;
        const int k = static_cast<int>(q.size()) - 1;
        VertexSet prefix(g.n());
        for (int i = 0; i <= k; ++i) {
            prefix |= closed_neighborhood(g, q[i]);
            sink.add(trivial_entry(g, prefix, "N[v0..v" + std::to_string(i) + "]"));
        }
        for (int p = t + 2; p <= k; ++p)
            for (int qq = p + t + 2; qq <= k - t - 2; ++qq) {
                VertexSet q1 = seg(g, q, 0, t - 1), q2 = seg(g, q, p, p + t - 1), q3 = seg(g, q, qq, qq + t - 1);
                VertexSet cut = open_neighborhood(g, q1) | open_neighborhood(g, q2) | open_neighborhood(g, q3);
                cut.erase(q[t]);
                cut.erase(q[p + t]);
                cut.erase(q[qq + t]);
                VertexSet scope = g.all() - cut;
                std::array<Vertex, 3> z{q[0], q[p], q[qq]};
                std::optional<Esd> ext;
                if (opt.provider) ext = opt.provider(g, scope, z);
                ++r.shatter_calls;
                auto out = claw_shatter(g, scope, z, ext, opt.tree_cap);
                if (out.kind == TreeOrEsd::Kind::Tree) {
                    VertexSet claw = prune_to(g, out.tree, z);
                    Vertex c = claw_center(g, claw, t);
                    if (c < 0) throw std::logic_error("find_claw: tree through detached segments is not a claw");
                    if (std::find(r.claws.begin(), r.claws.end(), claw) == r.claws.end()) r.claws.push_back(claw);
                    if (!r.claw) {
                        r.claw = claw;
                        r.center = c;
                    }
                    if (!opt.collect_all_claws) return r;
                } else if (out.kind == TreeOrEsd::Kind::Decomposition) {
                    VertexSet x = closed_neighborhood(g, q1) | closed_neighborhood(g, q2) | closed_neighborhood(g, q3);
                    sink.add(make_entry(g, x, out.esd, "shatter p=" + std::to_string(p) + " q=" + std::to_string(qq)));
                } else {
                    ++r.failures;
                }
            }
    }
    return r;
}

LobsterResult find_lobster(const Graph& g, int t, const OracleOptions& opt, Vertex u) {
    if (t < 1) throw std::invalid_argument("find_lobster: t must be positive");
    if (u < 0 || u >= g.n()) throw std::invalid_argument("find_lobster: u out of range");
    if (!is_connected(g, g.all())) throw std::invalid_argument("find_lobster: graph must be connected");
    const int n = g.n();
    LobsterResult r;
    EntrySink sink{g, opt.validate, r.family, {}};
    OracleOptions inner = opt;
    inner.collect_all_claws = true;
    inner.validate = false;

    // find_claw on G[scope] from `start`, results in G's ids
    std::map<std::pair<std::vector<Vertex>, Vertex>, ClawResult> claw_cache;
    auto claw_on = [&](const VertexSet& scope, Vertex start) -> const ClawResult& {
        auto key = std::make_pair(scope.to_vector(), start);
        auto it = claw_cache.find(key);
        if (it != claw_cache.end()) return it->second;
        Subgraph sub = induced_subgraph(g, scope);
        ClawResult local = find_claw(sub.graph, sub.from_parent[start], t, inner);
        ClawResult lifted;
        lifted.failures = local.failures;
        for (auto& e : local.family) lifted.family.push_back(lift_entry(e, sub, n));
        for (auto& c : local.claws) lifted.claws.push_back(sub.lift(c, n));
        r.failures += local.failures;
        return claw_cache.emplace(key, std::move(lifted)).first->second;
    };
    // entry of G[outer] - X lifted through "remove `cut` vertices, pad with the other components"
    auto lift_through = [&](const FamilyEntry& e, const VertexSet& extra_x, const VertexSet& others,
                            const std::string& origin) {
        VertexSet x = e.x | extra_x;
        if (e.trivial) return trivial_entry(g, x, origin);
        Esd d = pad_with_components(restrict_esd(e.esd, x), g, others - x);
        return FamilyEntry{x, std::move(d), false, origin};
    };

    std::set<std::tuple<std::vector<Vertex>, Vertex, std::vector<Vertex>>> stage_b_done;

    auto stage_b = [&](const VertexSet& tclaw, Vertex w, const VertexSet& base, const VertexSet& d,
                       const VertexSet& j) -> bool {
        if (!stage_b_done.insert({tclaw.to_vector(), w, d.to_vector()}).second) return false;
        VertexSet s2 = d;
        s2.insert(w);
        VertexSet others_j = j - d;
        // X'' of G'' = G[s2] lifted to X = X'' + N[T - w]
        auto lift2 = [&](const FamilyEntry& e, const std::string& origin) {
            return lift_through(e, base, others_j, origin);
        };
        auto nb2 = [&](Vertex y) { return closed_neighborhood(g, y) & s2; };
        // trivial entries only need X; the ESD is rebuilt on G - X
        sink.add(lift2(trivial_entry(g, VertexSet(n, {w}), ""), "B: X''={w}"));
        Subgraph sub2 = induced_subgraph(g, s2);
        for (const auto& pl : gyarfas_family(sub2.graph, sub2.from_parent[w])) {
            if (pl.empty()) continue;
            Path path;
            for (Vertex y : pl) path.push_back(sub2.to_parent[y]);
            const int ell = static_cast<int>(path.size()) - 1;
            VertexSet pre(n);  // N_{G''}[y_0..y_{r-1}]
            for (int rr = 0; rr <= ell; ++rr) {
                VertexSet level = s2 - pre;
                if (rr == 0) level.erase(w);
                for (const auto& d2 : components(g, level)) {
                    bool touches = false;
                    for (Vertex x : g.neighbors(path[rr]))
                        if (d2.contains(x)) touches = true;
                    if (!touches) continue;
                    VertexSet s3 = d2;
                    s3.insert(path[rr]);
                    const ClawResult& cr = claw_on(s3, path[rr]);
                    VertexSet cut3 = pre;
                    cut3.insert(path[rr]);
                    for (const auto& e : cr.family)
                        sink.add(lift2(lift_through(e, cut3, level - d2, ""),
                                       "B: left-claw family r=" + std::to_string(rr)));
                    for (const auto& sp : cr.claws) {
                        ++r.left_claws;
                        Vertex cs = claw_center(g, sp, 1);
                        VertexSet sclaw = truncate_claw(g, sp, cs, t);
                        Vertex v = tip_toward(g, sp, cs, path[rr], t);
                        for (int p = t + 2; p <= rr - 2 * t - 4; ++p) {
                            VertexSet p2 = seg(g, path, p, p + t - 1);
                            VertexSet s_minus = sclaw, t_minus = tclaw;
                            s_minus.erase(v);
                            t_minus.erase(w);
                            VertexSet removed = closed_neighborhood(g, s_minus) | closed_neighborhood(g, t_minus) |
                                                open_neighborhood(g, p2);
                            removed.erase(path[p + t]);
                            removed.erase(v);
                            removed.erase(w);
                            VertexSet scope4 = g.all() - removed;
                            std::array<Vertex, 3> z{v, w, path[p]};
                            if (!scope4.contains(path[p])) continue;
                            std::optional<Esd> ext;
                            if (opt.provider) ext = opt.provider(g, scope4, z);
                            auto out = claw_shatter(g, scope4, z, ext, opt.tree_cap);
                            if (out.kind == TreeOrEsd::Kind::Tree) {
                                VertexSet cand = tclaw | sclaw | prune_to(g, out.tree, z);
                                if (is_lobster(g, cand, t)) {
                                    r.lobster = cand;
                                    return true;
                                }
                                ++r.trees_without_lobster;
                            } else if (out.kind == TreeOrEsd::Kind::Decomposition) {
                                VertexSet x = closed_neighborhood(g, sclaw) | closed_neighborhood(g, tclaw) |
                                              closed_neighborhood(g, p2);
                                sink.add(make_entry(g, x, out.esd, "final shatter p=" + std::to_string(p)));
                            } else {
                                ++r.failures;
                            }
                        }
                    }
                }
                pre |= nb2(path[rr]);
                sink.add(lift2(trivial_entry(g, pre, ""),
                               "B: N[y0..y" + std::to_string(rr) + "]"));
            }
        }
        return false;
    };

    sink.add(trivial_entry(g, VertexSet(n, {u}), "A: X={u}"));
    for (const auto& q : gyarfas_family(g, u)) {
        if (q.empty()) continue;
        const int k = static_cast<int>(q.size()) - 1;
        VertexSet pre(n);  // N[v_0..v_{p-1}]
        for (int p = 0; p <= k; ++p) {
            VertexSet level = g.all() - pre;
            if (p == 0) level.erase(u);
            for (const auto& d : components(g, level)) {
                bool touches = false;
                for (Vertex x : g.neighbors(q[p]))
                    if (d.contains(x)) touches = true;
                if (!touches) continue;
                VertexSet s1 = d;
                s1.insert(q[p]);
                const ClawResult& cr = claw_on(s1, q[p]);
                VertexSet cut = pre;
                cut.insert(q[p]);
                for (const auto& e : cr.family)
                    sink.add(lift_through(e, cut, level - d, "A: right-claw family p=" + std::to_string(p)));
                for (const auto& tp : cr.claws) {
                    ++r.right_claws;
                    Vertex c = claw_center(g, tp, 1);
                    VertexSet tclaw = truncate_claw(g, tp, c, t);
                    Vertex w = tip_toward(g, tp, c, q[p], t);
                    VertexSet t_minus = tclaw;
                    t_minus.erase(w);
                    VertexSet base = closed_neighborhood(g, t_minus);
                    sink.add(trivial_entry(g, base, "A: N[T-w]"));
                    VertexSet j = g.all() - base;
                    for (const auto& dd : components(g, j)) {
                        bool adj = false;
                        for (Vertex x : g.neighbors(w))
                            if (dd.contains(x)) adj = true;
                        if (adj && stage_b(tclaw, w, base, dd, j)) return r;
                    }
                }
            }
            pre |= closed_neighborhood(g, q[p]);
        }
    }
    return r;
}

bool is_light(const Graph& g, const WeightFn& w, Ratio sigma, int power) {
    const Weight total = weight_of(w, g.all());
    for (Vertex v = 0; v < g.n(); ++v)
        if (!leq_pow_scaled(weight_of(w, closed_neighborhood(g, v)), sigma, power, total)) return false;
    return true;
}

bool meets_conclusion(const Graph& g, const WeightFn& w, const FamilyEntry& e, Ratio sigma, int power) {
    const Weight total = weight_of(w, g.all());
    const Weight wx = weight_of(w, e.x);
    for (const auto& a : atoms(g, e.esd)) {
        Weight wa = weight_of(w, a.vertices);
        if (!leq_one_minus_pow(wa, sigma, power, total)) return false;
        if (!leq_scaled(wx, sigma, total - wa)) return false;
    }
    return true;
}

PlantedClaw planted_claw_instance(int t, int padding, Rng& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int x1 = t + pick(0, 1);
    const int x2 = x1 + t + 2 + pick(0, 2);
    const int x3 = x2 + t + 2 + pick(0, 2);
    const int len = x3 + 4 + pick(0, 1);  // the walk toward z stops one short of z
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    int next = len;
    const Vertex hub = next++;
    std::vector<Vertex> attachable{hub};
    for (int x : {x1, x2, x3}) {
        Vertex prev = hub;
        int legs = pick(0, 2);
        for (int i = 0; i < legs; ++i) {
            Vertex v = next++;
            edges.emplace_back(prev, v);
            attachable.push_back(v);
            prev = v;
        }
        edges.emplace_back(prev, x);
    }
    for (int i = 0; i < padding; ++i) {
        Vertex v = next++;
        int links = pick(1, 2);
        for (int l = 0; l < links; ++l)
            edges.emplace_back(attachable[pick(0, static_cast<int>(attachable.size()) - 1)], v);
        attachable.push_back(v);
    }
    return {Graph(next, edges), 0, t};
}

}  // namespace mwis
