#include "mwis/assembly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace mwis {

namespace {

// atom index helpers matching the order produced by atoms()
int edge_atom(int e, int kind) { return 4 * e + kind; }  // 0 bot, 1 u, 2 v, 3 full
int vertex_atom(const Esd& d, Vertex v) { return 4 * d.pattern.m() + v; }
int tri_atom(const Esd& d, int t) { return 4 * d.pattern.m() + d.pattern.n() + t; }

Weight w_of(const AssemblyInput& in, int atom) { return weight_of(*in.w, in.per_atom[atom]); }

std::vector<std::vector<int>> triangles_of_edges(const Esd& d) {
    std::vector<std::vector<int>> out(d.pattern.m());
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
        auto& t = d.triangles[i].h;
        out[d.edge_index(t[0], t[1])].push_back(static_cast<int>(i));
        out[d.edge_index(t[0], t[2])].push_back(static_cast<int>(i));
        out[d.edge_index(t[1], t[2])].push_back(static_cast<int>(i));
    }
    return out;
}

void check_input(const AssemblyInput& in) {
    if (in.per_atom.size() != in.all_atoms.size()) throw std::invalid_argument("assembly: per-atom sets missing");
    if constexpr (kChecked) {
        for (std::size_t i = 0; i < in.all_atoms.size(); ++i) {
            if (!in.per_atom[i].subset_of(in.all_atoms[i].vertices))
                throw std::invalid_argument("assembly: per-atom set escapes its atom");
            if (!is_independent(*in.g, in.per_atom[i]))
                throw std::invalid_argument("assembly: per-atom set is not independent");
        }
    }
}

}  // namespace

Auxiliary build_auxiliary(const AssemblyInput& in) {
    check_input(in);
    const Esd& d = *in.d;
    const Graph& h = d.pattern;
    const int k = h.n(), m = h.m();
    auto tris = triangles_of_edges(d);
    Auxiliary aux;
    aux.n = k + m;
    aux.w_edge.resize(m);
    aux.w_xu.resize(m);
    aux.w_xv.resize(m);
    for (Vertex v = 0; v < k; ++v) aux.offset = checked_add(aux.offset, w_of(in, vertex_atom(d, v)));
    for (int e = 0; e < m; ++e) aux.offset = checked_add(aux.offset, w_of(in, edge_atom(e, 0)));
    for (std::size_t t = 0; t < d.triangles.size(); ++t)
        aux.offset = checked_add(aux.offset, w_of(in, tri_atom(d, static_cast<int>(t))));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = h.edges()[e];
        Weight bot = w_of(in, edge_atom(e, 0));
        Weight wu = w_of(in, vertex_atom(d, u)), wv = w_of(in, vertex_atom(d, v));
        aux.w_xu[e] = w_of(in, edge_atom(e, 1)) - wu - bot;
        aux.w_xv[e] = w_of(in, edge_atom(e, 2)) - wv - bot;
        Weight full = w_of(in, edge_atom(e, 3)) - wu - wv - bot;
        for (int t : tris[e]) full -= w_of(in, tri_atom(d, t));
        aux.w_edge[e] = full;
        aux.edges.push_back({u, v, aux.w_edge[e]});
        aux.edges.push_back({k + e, u, aux.w_xu[e]});
        aux.edges.push_back({k + e, v, aux.w_xv[e]});
    }
    return aux;
}

std::int64_t aux_weight(const Auxiliary& aux, const std::vector<std::pair<Vertex, Vertex>>& m) {
    std::int64_t total = 0;
    for (auto [a, b] : m) {
        bool found = false;
        for (auto& e : aux.edges)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                total += e.w;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("aux_weight: pair is not an edge of H'");
    }
    return total;
}

Weight family_weight(const AssemblyInput& in, const std::vector<int>& family) {
    Weight total = 0;
    for (int a : family) total = checked_add(total, w_of(in, a));
    return total;
}

std::vector<std::pair<Vertex, Vertex>> atoms_to_matching(const AssemblyInput& in, const std::vector<int>& family) {
    const Esd& d = *in.d;
    if (!family_is_independent(in.all_atoms, family, d))
        throw std::invalid_argument("atoms_to_matching: family is not independent");
    const int k = d.pattern.n();
    std::vector<std::pair<Vertex, Vertex>> m;
    for (int a : family) {
        const Atom& at = in.all_atoms[a];
        if (at.kind == Atom::Kind::EdgeBot || at.kind == Atom::Kind::Vertex || at.kind == Atom::Kind::Triangle)
            continue;
        auto [u, v] = d.pattern.edges()[at.index];
        if (at.kind == Atom::Kind::EdgeFull) m.emplace_back(u, v);
        else if (at.kind == Atom::Kind::EdgeU) m.emplace_back(std::min(u, k + at.index), std::max(u, k + at.index));
        else m.emplace_back(std::min(v, k + at.index), std::max(v, k + at.index));
    }
    std::sort(m.begin(), m.end());
    std::set<Vertex> seen;
    for (auto [a, b] : m)
        if (!seen.insert(a).second || !seen.insert(b).second)
            throw std::logic_error("atoms_to_matching: result is not a matching");
    if constexpr (kChecked) {
        auto aux = build_auxiliary(in);
        if (aux_weight(aux, m) < family_weight(in, family) - aux.offset)
            throw std::logic_error("atoms_to_matching: weight inequality violated");
    }
    return m;
}

std::vector<int> matching_to_atoms(const AssemblyInput& in, const std::vector<std::pair<Vertex, Vertex>>& m) {
    const Esd& d = *in.d;
    const Graph& h = d.pattern;
    const int k = h.n();
    std::set<Vertex> seen;
    for (auto [a, b] : m)
        if (!seen.insert(a).second || !seen.insert(b).second)
            throw std::invalid_argument("matching_to_atoms: not a matching");
    std::vector<char> touched(k, 0), in_m(h.m(), 0), xu(h.m(), 0), xv(h.m(), 0);
    for (auto [a0, b0] : m) {
        Vertex a = std::min(a0, b0), b = std::max(a0, b0);
        if (b < k) {
            int e = d.edge_index(a, b);
            if (e < 0) throw std::invalid_argument("matching_to_atoms: not an edge of H");
            in_m[e] = 1;
        } else {
            int e = b - k;
            if (e >= h.m()) throw std::invalid_argument("matching_to_atoms: vertex outside H'");
            auto [u, v] = h.edges()[e];
            if (a == u) xu[e] = 1;
            else if (a == v) xv[e] = 1;
            else throw std::invalid_argument("matching_to_atoms: x_e joined to a non-endpoint");
        }
        if (a < k) touched[a] = 1;
        if (b < k) touched[b] = 1;
    }
    std::vector<int> fam;
    for (int e = 0; e < h.m(); ++e) {
        if (in_m[e]) fam.push_back(edge_atom(e, 3));
        if (xu[e]) fam.push_back(edge_atom(e, 1));
        if (xv[e]) fam.push_back(edge_atom(e, 2));
        if (!in_m[e] && !xu[e] && !xv[e]) fam.push_back(edge_atom(e, 0));
    }
    for (Vertex v = 0; v < k; ++v)
        if (!touched[v]) fam.push_back(vertex_atom(d, v));
    for (std::size_t t = 0; t < d.triangles.size(); ++t) {
        auto& tri = d.triangles[t].h;
        bool free = !in_m[d.edge_index(tri[0], tri[1])] && !in_m[d.edge_index(tri[0], tri[2])] &&
                    !in_m[d.edge_index(tri[1], tri[2])];
        if (free) fam.push_back(tri_atom(d, static_cast<int>(t)));
    }
    std::sort(fam.begin(), fam.end());
    if constexpr (kChecked) {
        if (!family_is_independent(in.all_atoms, fam, d))
            throw std::logic_error("matching_to_atoms: family is not independent");
        auto aux = build_auxiliary(in);
        if (family_weight(in, fam) != aux.offset + aux_weight(aux, m))
            throw std::logic_error("matching_to_atoms: weight identity violated");
    }
    return fam;
}

AssemblyOutput assemble(const AssemblyInput& in) {
    AssemblyOutput out;
    out.aux = build_auxiliary(in);
    out.matching = max_weight_matching(out.aux.n, out.aux.edges);
    out.family = matching_to_atoms(in, out.matching.edges);
    out.result = VertexSet(in.g->n());
    for (int a : out.family) out.result |= in.per_atom[a];
    out.weight = weight_of(*in.w, out.result);
    if constexpr (kChecked) {
        if (out.weight != out.aux.offset + out.matching.weight)
            throw std::logic_error("assemble: result weight differs from a + w'(M)");
        if (!is_independent(*in.g, out.result)) throw std::logic_error("assemble: result is not independent");
    }
    return out;
}

Weight best_family_weight(const AssemblyInput& in, int cap) {
    const int na = static_cast<int>(in.all_atoms.size());
    if (na > cap) throw CapExceeded("best_family_weight: " + std::to_string(na) + " atoms");
    std::vector<std::vector<char>> clash(na, std::vector<char>(na, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) clash[i][j] = i != j && conflicts(in.all_atoms[i], in.all_atoms[j], *in.d);
    Weight best = 0;
    std::vector<int> chosen;
    std::function<void(int, Weight)> rec = [&](int i, Weight acc) {
        if (i == na) {
            best = std::max(best, acc);
            return;
        }
        rec(i + 1, acc);
        for (int c : chosen)
            if (clash[i][c]) return;
        chosen.push_back(i);
        rec(i + 1, acc + w_of(in, i));
        chosen.pop_back();
    };
    rec(0, 0);
    return best;
}

}  // namespace mwis
