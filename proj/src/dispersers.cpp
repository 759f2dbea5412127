#include "mwis/dispersers.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "mwis/assembly.hpp"

namespace mwis {

namespace {

BigRational big(Weight x) { return BigRational(BigInt(x)); }

BigInt ipow(BigInt b, long long e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string set_key(const VertexSet& s) {
    std::string k;
    s.for_each([&](Vertex v) {
        k += std::to_string(v);
        k += ',';
    });
    return k;
}

}  // namespace

Goodness is_good(const Graph& g, const WeightFn& w, const DisperserEntry& e, Ratio gamma, const BigRational& delta) {
    const Weight total = weight_of(w, g.all());
    const Weight wx = weight_of(w, e.x);
    Goodness out;
    out.shrinking = true;
    out.safe = leq_scaled(wx, gamma, total);
    const BigRational keep = BigRational(1) - delta;
    for (const auto& a : atoms(g, e.esd)) {
        if (a.trivial) continue;
        const Weight wa = weight_of(w, a.vertices);
        if (big(wa) > keep * big(total)) out.shrinking = false;
        if (!leq_scaled(wx, gamma, total - wa)) out.safe = false;
    }
    return out;
}

bool is_uniform(const Graph& g, const DisperserEntry& e, Ratio xi) {
    if (!(Ratio(0) < xi && xi < Ratio(1))) throw std::invalid_argument("is_uniform: xi outside (0,1)");
    const long long n = g.n(), p = xi.num, q = xi.den;
    const BigInt np = ipow(BigInt(n), p);
    const BigInt xq = ipow(BigInt(e.x.size()), q);
    auto ok = [&](long long a) {
        BigInt rest = ipow(BigInt(n - a), q);
        return xq * np <= rest && np <= rest;
    };
    if (!ok(0)) return false;
    for (const auto& a : atoms(g, e.esd))
        if (!ok(a.vertices.size())) return false;
    return true;
}

WeightFn restrict_to(const WeightFn& w, const VertexSet& i) {
    WeightFn out(w.size(), 0);
    i.for_each([&](Vertex v) { out[v] = w[v]; });
    return out;
}

VertexSet heavy_vertices(const Graph& g, const WeightFn& w, const VertexSet& i, Ratio beta) {
    if (!is_independent(g, i)) throw std::invalid_argument("heavy_vertices: I is not independent");
    const Weight wi = weight_of(w, i);
    if (wi <= 0) throw std::invalid_argument("heavy_vertices: w(I) = 0");
    VertexSet out(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        Weight s = weight_of(w, closed_neighborhood(g, v) & i);
        // s >= beta * w(I)
        if (static_cast<__int128>(s) * beta.den >= static_cast<__int128>(beta.num) * wi) out.insert(v);
    }
    return out;
}

int heavy_bound(int n, Ratio beta) {
    if (n < 2) return 1;
    if (beta.num <= 0) return INT_MAX;
    // smallest k with 2^(k beta) >= n, i.e. 2^(k num) >= n^den
    const BigInt target = ipow(BigInt(n), beta.den);
    long long k = std::max<long long>(0, static_cast<long long>(std::log2(n) / beta.to_double()) - 2);
    while (ipow(BigInt(2), k * beta.num) < target) ++k;
    return static_cast<int>(std::min<long long>(k, INT_MAX));
}

VertexSet heavy_cover_search(const Graph& g, const WeightFn& w, const VertexSet& i, Ratio beta) {
    const VertexSet z = heavy_vertices(g, w, i, beta);
    const auto cand = i.to_vector();
    auto covers = [&](const VertexSet& j) { return z.subset_of(closed_neighborhood(g, j)); };
    // greedy first
    VertexSet greedy(g.n()), left = z;
    while (!left.empty()) {
        Vertex best = -1;
        int gain = 0;
        for (Vertex v : cand) {
            int c = (closed_neighborhood(g, v) & left).size();
            if (c > gain) gain = c, best = v;
        }
        if (best < 0) throw std::logic_error("heavy_cover_search: heavy vertices not dominated by I");
        greedy.insert(best);
        left -= closed_neighborhood(g, best);
    }
    // exhaustive confirmation: any cover strictly smaller than the greedy one?
    VertexSet result = greedy;
    const int m = static_cast<int>(cand.size());
    for (int size = 0; size < greedy.size() && result == greedy; ++size) {
        std::vector<int> idx(size);
        for (int a = 0; a < size; ++a) idx[a] = a;
        while (true) {
            VertexSet j(g.n());
            for (int a : idx) j.insert(cand[a]);
            if (covers(j)) {
                result = j;
                break;
            }
            int a = size - 1;
            while (a >= 0 && idx[a] == m - size + a) --a;
            if (a < 0) break;
            ++idx[a];
            for (int b = a + 1; b < size; ++b) idx[b] = idx[b - 1] + 1;
        }
    }
    if (result.size() > heavy_bound(g.n(), beta))
        throw std::logic_error("heavy_cover_search: cover exceeds ceil(beta^-1 log n)");
    return result;
}

BigRational class_p(const GraphClass& cls, Ratio sigma) {
    switch (cls.kind) {
        case GraphClass::Kind::Pt:
        case GraphClass::Kind::CgeT: return sigma.big() / BigRational(4 * cls.t);
        case GraphClass::Kind::YgeT: return pow(sigma.big(), 8);
        case GraphClass::Kind::LgeT: return pow(sigma.big(), 40);
        default: throw std::invalid_argument("class_p: no disperser for " + cls.name());
    }
}

UniformParams uniform_params(const GraphClass& cls) {
    switch (cls.kind) {
        case GraphClass::Kind::Pt:
        case GraphClass::Kind::CgeT: return {Ratio(1, 2), Ratio(1, 4 * std::max(1, cls.t - 1))};
        case GraphClass::Kind::YgeT: return {Ratio(1, 9), Ratio(1)};
        case GraphClass::Kind::LgeT: return {Ratio(1, 41), Ratio(1)};
        default: throw std::invalid_argument("uniform_params: no uniform disperser for " + cls.name());
    }
}

DisperserParams default_params(const GraphClass& cls, Ratio gamma, int n) {
    DisperserParams p;
    p.gamma = gamma;
    p.delta = class_p(cls, gamma);
    p.beta = p.delta / 2;
    auto up = uniform_params(cls);
    p.xi = up.xi;
    p.tau = up.tau;
    // n0^p >= 3^q implies n0 > e^(1/xi); saturates far above desk scale
    const BigInt target = ipow(BigInt(3), p.xi.den);
    double guess = std::pow(3.0, p.xi.to_double() > 0 ? 1.0 / p.xi.to_double() : 1.0);
    if (guess > 4e18) {
        p.n0 = LLONG_MAX;
    } else {
        p.n0 = std::max<long long>(1, static_cast<long long>(guess) - 2);
        while (ipow(BigInt(p.n0), p.xi.num) < target) ++p.n0;
    }
    p.j_bound = 2.0 / p.delta.convert_to<double>() * std::log2(std::max(2, n)) + 1;
    return p;
}

bool degree_condition(const Graph& g, Ratio xi, Ratio tau) {
    // (|N[v]| tau.den)^q <= tau.num^q n^p
    const BigInt rhs = ipow(BigInt(tau.num), xi.den) * ipow(BigInt(g.n()), xi.num);
    for (Vertex v = 0; v < g.n(); ++v)
        if (ipow(BigInt(g.degree(v) + 1) * tau.den, xi.den) > rhs) return false;
    return true;
}

Disperser guess_heavy(const Graph& g, const InnerFamily& inner, const DisperserParams& params) {
    Disperser out;
    out.params = params;
    std::unordered_set<std::string> seen;
    auto push = [&](DisperserEntry e) {
        std::string key = set_key(e.x);
        if (!e.trivial) key += esd_to_json(e.esd).dump();
        if (!seen.insert(key).second) return;
        if (kChecked && !e.trivial) {
            auto rep = validate_esd(g, e.esd, g.all() - e.x);
            if (!rep.ok) throw std::logic_error("guess_heavy: invalid ESD (" + rep.violations.front() + ")");
        }
        out.strong = out.strong && e.trivial;
        out.entries.push_back(std::move(e));
    };
    std::unordered_map<VertexSet, std::vector<FamilyEntry>, VertexSetHash> cache;

    auto visit = [&](const VertexSet& j) {
        ++out.stats.j_candidates;
        const VertexSet nj = closed_neighborhood(g, j);
        const VertexSet x0 = nj - j;
        push(trivial_entry(g, x0, "J"));
        for (const auto& c : components(g, g.all() - nj)) {
            auto sub = induced_subgraph(g, c);
            auto it = cache.find(c);
            if (it == cache.end()) {
                std::vector<FamilyEntry> fam;
                try {
                    fam = inner(sub.graph, out.stats);
                } catch (const ClassViolation& cv) {
                    std::vector<Vertex> lifted;
                    for (Vertex v : cv.witness) lifted.push_back(sub.to_parent[v]);
                    std::sort(lifted.begin(), lifted.end());
                    throw ClassViolation(cv.what(), lifted);
                }
                it = cache.emplace(c, std::move(fam)).first;
            }
            for (const auto& e : it->second) {
                ++out.stats.inner_entries;
                VertexSet x = sub.lift(e.x, g.n()) | x0;
                if (e.trivial) {
                    push(trivial_entry(g, x, e.origin));
                    continue;
                }
                Esd d = pad_with_components(lift_esd(e.esd, sub, g.n()), g, (g.all() - x) - c);
                push({x, std::move(d), false, e.origin});
            }
        }
    };

    // independent J of size <= j_cap, ascending DFS
    VertexSet j(g.n());
    std::function<void(Vertex, int)> rec = [&](Vertex from, int left) {
        visit(j);
        if (left == 0) return;
        for (Vertex v = from; v < g.n(); ++v) {
            bool ok = true;
            for (Vertex y : g.neighbors(v))
                if (j.contains(y)) ok = false;
            if (!ok) continue;
            j.insert(v);
            rec(v + 1, left - 1);
            j.erase(v);
        }
    };
    rec(0, params.j_cap);
    return out;
}

InnerFamily pt_family() {
    return [](const Graph& c, DisperserStats&) {
        std::vector<FamilyEntry> out;
        for (const auto& q : gyarfas_family(c, 0)) {
            VertexSet x = q.empty() ? VertexSet(c.n(), {0}) : closed_neighborhood(c, path_set(c, q));
            out.push_back(trivial_entry(c, x, "gyarfas"));
        }
        return out;
    };
}

InnerFamily longhole_family(int t) {
    return [t](const Graph& c, DisperserStats&) {
        std::vector<FamilyEntry> out;
        for (const auto& q : long_hole_family(c, t, 0))
            out.push_back(trivial_entry(c, closed_neighborhood(c, path_set(c, q)), "hole"));
        return out;
    };
}

InnerFamily claw_family(int t, const OracleOptions& opt) {
    return [t, opt](const Graph& c, DisperserStats& st) {
        auto r = find_claw(c, 0, t, opt);
        st.failures += r.failures;
        if (r.claw) {
            ++st.claws_seen;
            throw ClassViolation("find_claw: induced (>=t)-claw found", r.claw->to_vector());
        }
        return r.family;
    };
}

InnerFamily lobster_family(int t, const OracleOptions& opt) {
    return [t, opt](const Graph& c, DisperserStats& st) {
        auto r = find_lobster(c, t, opt, 0);
        st.failures += r.failures;
        if (r.lobster) {
            ++st.claws_seen;
            throw ClassViolation("find_lobster: induced (>=t)-lobster found", r.lobster->to_vector());
        }
        return r.family;
    };
}

namespace {

DisperserParams with_cap(DisperserParams p, int j_cap) {
    p.j_cap = j_cap;
    return p;
}

}  // namespace

Disperser strong_disperser_pt(const Graph& g, Ratio gamma, int t, int j_cap) {
    return guess_heavy(g, pt_family(), with_cap(default_params(GraphClass::pt(t), gamma, g.n()), j_cap));
}

Disperser strong_disperser_longhole(const Graph& g, Ratio gamma, int t, int j_cap) {
    if (t < 4) throw std::invalid_argument("strong_disperser_longhole: t must be at least 4");
    return guess_heavy(g, longhole_family(t), with_cap(default_params(GraphClass::hole(t), gamma, g.n()), j_cap));
}

Disperser disperser_yget(const Graph& g, Ratio gamma, int t, int j_cap, const OracleOptions& opt) {
    return guess_heavy(g, claw_family(t, opt), with_cap(default_params(GraphClass::claw(t), gamma, g.n()), j_cap));
}

Disperser disperser_lget(const Graph& g, Ratio gamma, int t, int j_cap, const OracleOptions& opt) {
    return guess_heavy(g, lobster_family(t, opt),
                       with_cap(default_params(GraphClass::lobster(t), gamma, g.n()), j_cap));
}

InnerFamily cached(InnerFamily f, FamilyCache* cache) {
    if (!cache) return f;
    return [f = std::move(f), cache](const Graph& c, DisperserStats& st) {
        std::string key = std::to_string(c.n()) + ':';
        for (auto [a, b] : c.edges()) key += std::to_string(a) + '-' + std::to_string(b) + ',';
        if (auto it = cache->map.find(key); it != cache->map.end()) {
            ++cache->hits;
            return it->second;
        }
        auto fam = f(c, st);
        cache->map.emplace(std::move(key), fam);
        return fam;
    };
}

Disperser build_disperser(const Graph& g, const GraphClass& cls, Ratio gamma, int j_cap, const OracleOptions& opt,
                          FamilyCache* cache) {
    auto params = with_cap(default_params(cls, gamma, g.n()), j_cap);
    switch (cls.kind) {
        case GraphClass::Kind::Pt: return guess_heavy(g, cached(pt_family(), cache), params);
        case GraphClass::Kind::CgeT:
            if (cls.t < 4) throw std::invalid_argument("build_disperser: hole class needs t >= 4");
            return guess_heavy(g, cached(longhole_family(cls.t), cache), params);
        case GraphClass::Kind::YgeT: return guess_heavy(g, cached(claw_family(cls.t, opt), cache), params);
        case GraphClass::Kind::LgeT: return guess_heavy(g, cached(lobster_family(cls.t, opt), cache), params);
        default: throw std::invalid_argument("build_disperser: no disperser for " + cls.name());
    }
}

std::optional<int> good_entry(const Graph& g, const WeightFn& w, const VertexSet& i, const Disperser& d) {
    WeightFn wi = restrict_to(w, i);
    for (std::size_t k = 0; k < d.entries.size(); ++k)
        if (is_good(g, wi, d.entries[k], d.params.gamma, d.params.delta).good()) return static_cast<int>(k);
    return std::nullopt;
}

namespace {

int max_atom(const Graph& g, const DisperserEntry& e) {
    int m = 0;
    for (const auto& a : atoms(g, e.esd)) m = std::max(m, a.vertices.size());
    return m;
}

// family path lookups switch to the direct construction above this size
constexpr int kSelectLimit = 400;

}  // namespace

DisperserEntry uniform_disperser(const Graph& g, const GraphClass& cls, bool check_degree, const OracleOptions& opt) {
    if (g.n() == 0 || !is_connected(g, g.all())) throw PreconditionError("uniform_disperser: graph must be connected");
    const auto up = uniform_params(cls);
    if (check_degree && !degree_condition(g, up.xi, up.tau))
        throw PreconditionError("uniform_disperser: some |N[v]| exceeds tau n^xi");
    const WeightFn unit = unit_weights(g);
    switch (cls.kind) {
        case GraphClass::Kind::Pt: {
            auto cert = g.n() <= kSelectLimit ? gyarfas_select(g, 0, unit, Ratio(1, 4))
                                              : gyarfas_construct(g, 0, unit, Ratio(1, 4));
            if (static_cast<int>(cert.path.size()) >= cls.t)
                throw ClassViolation("uniform_disperser: Gyarfas path is an induced P_t", cert.path);
            VertexSet x = cert.path.empty() ? VertexSet(g.n(), {0}) : closed_neighborhood(g, path_set(g, cert.path));
            auto e = trivial_entry(g, x, "gyarfas");
            if (check_degree && !is_uniform(g, e, up.xi)) throw std::logic_error("uniform_disperser: not uniform");
            return e;
        }
        case GraphClass::Kind::CgeT: {
            auto sep = g.n() <= kSelectLimit ? long_hole_select(g, cls.t, unit, 0)
                                             : long_hole_construct(g, cls.t, unit, 0);
            auto e = trivial_entry(g, closed_neighborhood(g, path_set(g, sep.path)), "hole");
            if (check_degree && !is_uniform(g, e, up.xi)) throw std::logic_error("uniform_disperser: not uniform");
            return e;
        }
        case GraphClass::Kind::YgeT:
        case GraphClass::Kind::LgeT: {
            std::vector<FamilyEntry> fam;
            if (cls.kind == GraphClass::Kind::YgeT) {
                auto r = find_claw(g, 0, cls.t, opt);
                if (r.claw) throw ClassViolation("uniform_disperser: induced (>=t)-claw found", r.claw->to_vector());
                fam = std::move(r.family);
            } else {
                auto r = find_lobster(g, cls.t, opt, 0);
                if (r.lobster)
                    throw ClassViolation("uniform_disperser: induced (>=t)-lobster found", r.lobster->to_vector());
                fam = std::move(r.family);
            }
            for (const auto& e : fam)
                if (is_uniform(g, e, up.xi)) return e;
            if (check_degree) throw UniformUnavailable("uniform_disperser: no uniform member in the oracle family");
            // fallback pick: every atom strictly smaller than G, then smallest X
            const FamilyEntry* best = nullptr;
            for (const auto& e : fam) {
                if (max_atom(g, e) >= g.n()) continue;
                if (!best || std::pair(e.x.size(), max_atom(g, e)) < std::pair(best->x.size(), max_atom(g, *best)))
                    best = &e;
            }
            if (!best) throw UniformUnavailable("uniform_disperser: every family member keeps an atom of size n");
            return *best;
        }
        default: throw std::invalid_argument("uniform_disperser: unsupported class " + cls.name());
    }
}

nlohmann::json entry_to_json(const DisperserEntry& e) {
    return {{"x", e.x.to_vector()}, {"trivial", e.trivial}, {"origin", e.origin}, {"esd", esd_to_json(e.esd)}};
}

nlohmann::json disperser_to_json(const Disperser& d) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : d.entries) entries.push_back(entry_to_json(e));
    return {{"strong", d.strong},
            {"gamma", d.params.gamma.str()},
            {"j_cap", d.params.j_cap},
            {"stats",
             {{"j_candidates", d.stats.j_candidates},
              {"inner_entries", d.stats.inner_entries},
              {"failures", d.stats.failures}}},
            {"entries", entries}};
}

DisperserEntry entry_from_json(const nlohmann::json& j, const Graph& g) {
    DisperserEntry e;
    e.x = VertexSet(g.n(), j.at("x").get<std::vector<Vertex>>());
    e.esd = esd_from_json(j.at("esd"), g.n());
    e.trivial = j.contains("trivial") ? j["trivial"].get<bool>() : is_trivial_esd(g, e.esd);
    e.origin = j.value("origin", "");
    return e;
}

}  // namespace mwis
