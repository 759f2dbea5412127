#include "doctest.h"

#include "mwis/assembly.hpp"
#include "mwis/generators.hpp"
#include "mwis/matching.hpp"
#include "support.hpp"

using namespace mwis;

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST_CASE("matching: small fixed cases") {
    auto tri = max_weight_matching(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
    CHECK(tri.weight == 3);
    CHECK(tri.edges == Pairs{{0, 1}});

    auto neg = max_weight_matching(4, {{0, 1, -2}, {2, 3, -1}});
    CHECK(neg.weight == 0);
    CHECK(neg.edges.empty());

    auto p4 = max_weight_matching(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 5}});
    CHECK(p4.weight == 10);
    CHECK(p4.edges == Pairs{{0, 1}, {2, 3}});

    CHECK(brute_force_matching(0, {}).edges.empty());
    CHECK(brute_force_matching(2, {{0, 1, -1}}).weight == 0);
    auto c4 = brute_force_matching(4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
    CHECK(c4.weight == 4);
    CHECK(c4.edges.size() == 2);
}

TEST_CASE("matching: blossom agrees with enumeration") {
    Rng rng(41);
    std::uniform_int_distribution<int> nd(2, 10), wd(-5, 12);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = nd(rng);
        std::vector<WeightedEdge> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (es.size() < 18 && rng() % 3 == 0) es.push_back({a, b, wd(rng)});
        auto fast = max_weight_matching(n, es);
        auto slow = brute_force_matching(n, es);
        CHECK(fast.weight == slow.weight);
        CHECK(fast.edges == slow.edges);
    }
}

namespace {

// a-b-c strip over H-edge uv, p alone in eta(u), q alone in eta(v)
struct StripFixture {
    Graph g{5, {{0, 1}, {1, 2}}};
    WeightFn w{5, 1, 5, 3, 4};
    Esd d;
    AssemblyInput in;

    StripFixture() {
        d = empty_esd(Graph(2, {{0, 1}}), 5);
        d.eta_edge[0].all = VertexSet(5, {0, 1, 2});
        d.eta_edge[0].end_u = VertexSet(5, {0});
        d.eta_edge[0].end_v = VertexSet(5, {2});
        d.eta_vertex[0] = VertexSet(5, {3});
        d.eta_vertex[1] = VertexSet(5, {4});
        in.g = &g;
        in.w = &w;
        in.d = &d;
        in.all_atoms = atoms(g, d);
        for (const auto& a : in.all_atoms) {
            VertexSet s(5);
            switch (a.kind) {
                case Atom::Kind::EdgeBot: s.insert(1); break;
                case Atom::Kind::EdgeU: s.insert(0); break;
                case Atom::Kind::EdgeV: s.insert(2); break;
                case Atom::Kind::EdgeFull: s = VertexSet(5, {0, 2}); break;
                case Atom::Kind::Vertex: s.insert(a.index == 0 ? 3 : 4); break;
                default: break;
            }
            in.per_atom.push_back(s);
        }
    }
    int index(Atom::Kind k, int idx = 0) const {
        for (int i = 0; i < static_cast<int>(in.all_atoms.size()); ++i)
            if (in.all_atoms[i].kind == k && in.all_atoms[i].index == idx) return i;
        return -1;
    }
};

}  // namespace

TEST_CASE("auxiliary graph weights") {
    StripFixture f;
    REQUIRE(validate_esd(f.g, f.d).ok);
    auto aux = build_auxiliary(f.in);
    CHECK(aux.offset == 3 + 4 + 1);
    CHECK(aux.w_edge[0] == 10 - 3 - 4 - 1);
    CHECK(aux.w_xu[0] == 5 - 3 - 1);
    CHECK(aux.w_xv[0] == 5 - 4 - 1);

    // edgeless pattern: no x vertices, offset is the sum over components
    Graph g = testing_support::disjoint_union(path_graph(3), path_graph(2));
    WeightFn w{1, 2, 3, 4, 5};
    Esd td = trivial_esd(g);
    AssemblyInput in{&g, &w, &td, atoms(g, td), {}};
    for (const auto& a : in.all_atoms) in.per_atom.push_back(testing_support::best_independent(g, w, a.vertices));
    auto a2 = build_auxiliary(in);
    CHECK(a2.n == td.pattern.n());
    CHECK(a2.offset == 4 + 5);

    for (auto& s : in.per_atom) s = VertexSet(5);
    auto a3 = build_auxiliary(in);
    CHECK(a3.offset == 0);
    for (const auto& e : a3.edges) CHECK(e.w == 0);
}

TEST_CASE("atoms to matching and back") {
    StripFixture f;
    const Vertex xe = 2;  // x_e follows the two H-vertices
    CHECK(atoms_to_matching(f.in, {f.index(Atom::Kind::EdgeFull)}) == Pairs{{0, 1}});
    CHECK(atoms_to_matching(f.in, {f.index(Atom::Kind::EdgeBot), f.index(Atom::Kind::Vertex, 0),
                                   f.index(Atom::Kind::Vertex, 1)})
              .empty());

    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(matching_to_atoms(f.in, {}) == sorted({f.index(Atom::Kind::EdgeBot), f.index(Atom::Kind::Vertex, 0),
                                                 f.index(Atom::Kind::Vertex, 1)}));
    CHECK(matching_to_atoms(f.in, {{0, 1}}) == std::vector<int>{f.index(Atom::Kind::EdgeFull)});
    CHECK(matching_to_atoms(f.in, {{0, xe}}) ==
          sorted({f.index(Atom::Kind::EdgeU), f.index(Atom::Kind::Vertex, 1)}));
}

TEST_CASE("two disjoint H-edges matched at their ends") {
    // H = two disjoint edges 0-1 and 2-3, one G-vertex per strip, both in every end
    Esd d = empty_esd(Graph(4, {{0, 1}, {2, 3}}), 2);
    d.eta_edge[0].all = d.eta_edge[0].end_u = d.eta_edge[0].end_v = VertexSet(2, {0});
    d.eta_edge[1].all = d.eta_edge[1].end_u = d.eta_edge[1].end_v = VertexSet(2, {1});
    Graph g(2);
    WeightFn w{1, 1};
    REQUIRE(validate_esd(g, d).ok);
    AssemblyInput in{&g, &w, &d, atoms(g, d), {}};
    for (const auto& a : in.all_atoms) in.per_atom.push_back(a.vertices);
    int eu = -1, fv = -1;
    for (int i = 0; i < static_cast<int>(in.all_atoms.size()); ++i) {
        if (in.all_atoms[i].kind == Atom::Kind::EdgeU && in.all_atoms[i].index == 0) eu = i;
        if (in.all_atoms[i].kind == Atom::Kind::EdgeV && in.all_atoms[i].index == 1) fv = i;
    }
    auto m = atoms_to_matching(in, {eu, fv});
    std::sort(m.begin(), m.end());
    CHECK(m == Pairs{{0, 4}, {3, 5}});
}

TEST_CASE("assemble") {
    StripFixture f;
    auto out = assemble(f.in);
    CHECK(out.matching.edges == Pairs{{0, 1}});
    CHECK(out.result == VertexSet(5, {0, 2}));
    CHECK(out.weight == 10);

    for (auto& s : f.in.per_atom) s = VertexSet(5);
    auto empty = assemble(f.in);
    CHECK(empty.weight == 0);
    CHECK(empty.result.empty());

    // trivial decomposition with optimal per-component sets gives the optimum
    Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(12, 0.15, rng);
        WeightFn w = random_weights(12, 1, 9, rng);
        Esd td = trivial_esd(g);
        AssemblyInput in{&g, &w, &td, atoms(g, td), {}};
        for (const auto& a : in.all_atoms) in.per_atom.push_back(testing_support::best_independent(g, w, a.vertices));
        CHECK(assemble(in).weight == weight_of(w, testing_support::best_independent(g, w, g.all())));
    }
}

TEST_CASE("assemble equals the best atom family on random strips") {
    Rng rng(99);
    int tried = 0;
    while (tried < 150) {
        auto inst = testing_support::random_esd_instance(rng, 9, 3, 0.6, 0.4);
        Graph& g = inst.g;
        WeightFn w = random_weights(g.n(), 0, 9, rng);
        AssemblyInput in{&g, &w, &inst.d, atoms(g, inst.d), {}};
        if (in.all_atoms.size() > 12) continue;
        ++tried;
        for (const auto& a : in.all_atoms) in.per_atom.push_back(testing_support::best_independent(g, w, a.vertices));
        auto out = assemble(in);
        CHECK(out.weight == best_family_weight(in));
        CHECK(is_independent(g, out.result));
    }
}
