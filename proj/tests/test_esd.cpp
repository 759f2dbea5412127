#include "doctest.h"

#include <map>

#include "mwis/esd.hpp"
#include "mwis/generators.hpp"
#include "support.hpp"

using namespace mwis;

namespace {

// a-b-c decomposed over a single H-edge; a and c are the two ends
Esd p3_strip() {
    Esd d = empty_esd(Graph(2, {{0, 1}}), 3);
    d.eta_edge[0].all = VertexSet(3, {0, 1, 2});
    d.eta_edge[0].end_u = VertexSet(3, {0});
    d.eta_edge[0].end_v = VertexSet(3, {2});
    return d;
}

std::map<Atom::Kind, VertexSet> by_kind(const std::vector<Atom>& as) {
    std::map<Atom::Kind, VertexSet> m;
    for (const auto& a : as) m.emplace(a.kind, a.vertices);
    return m;
}

}  // namespace

TEST_CASE("trivial decompositions are valid") {
    Rng rng(3);
    for (int rep = 0; rep < 25; ++rep) {
        Graph g = random_graph(13, 0.15, rng);
        auto d = trivial_esd(g);
        CHECK(validate_esd(g, d).ok);
        CHECK(d.pattern.m() == 0);
        CHECK(d.pattern.n() == static_cast<int>(components(g).size()));
        CHECK(atoms(g, d).size() == components(g).size());
    }
    auto k3 = trivial_esd(testing_support::complete_graph(3));
    CHECK(k3.pattern.n() == 1);
    CHECK(k3.eta_vertex[0].size() == 3);
    CHECK(trivial_esd(Graph(3)).pattern.n() == 3);
    Graph mixed = testing_support::disjoint_union(path_graph(3), path_graph(2));
    std::vector<int> sizes;
    for (const auto& a : atoms(mixed, trivial_esd(mixed))) sizes.push_back(a.vertices.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
}

TEST_CASE("single strip over an H-edge") {
    Graph p3 = path_graph(3);
    Esd d = p3_strip();
    CHECK(validate_esd(p3, d).ok);

    auto m = by_kind(atoms(p3, d));
    CHECK(m[Atom::Kind::EdgeBot] == VertexSet(3, {1}));
    CHECK(m[Atom::Kind::EdgeU] == VertexSet(3, {0, 1}));
    CHECK(m[Atom::Kind::EdgeV] == VertexSet(3, {1, 2}));
    CHECK(m[Atom::Kind::EdgeFull] == VertexSet(3, {0, 1, 2}));
    CHECK(m[Atom::Kind::Vertex].empty());

    // b moved into eta(u): b-c joins eta(u) to the far end
    Esd bad = d;
    bad.eta_edge[0].all = VertexSet(3, {0, 2});
    bad.eta_vertex[0] = VertexSet(3, {1});
    auto rep = validate_esd(p3, bad);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("validator names duplicated and missing vertices") {
    Graph p3 = path_graph(3);
    Esd d = p3_strip();
    d.eta_vertex[1] = VertexSet(3, {1});
    auto rep = validate_esd(p3, d);
    REQUIRE_FALSE(rep.ok);
    bool named = false;
    for (const auto& v : rep.violations) named = named || v.find("vertex 1 lies in two parts") != std::string::npos;
    CHECK(named);

    Esd gap = p3_strip();
    gap.eta_edge[0].all.erase(1);
    CHECK_FALSE(validate_esd(p3, gap).ok);
}

TEST_CASE("random decompositions built by construction validate") {
    Rng rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        auto inst = testing_support::random_esd_instance(rng, 10, 4, 0.5, 0.4);
        auto r = validate_esd(inst.g, inst.d);
        CHECK(r.ok);
        // nonempty atoms at most 5n
        int nonempty = 0;
        for (const auto& a : atoms(inst.g, inst.d)) nonempty += !a.vertices.empty();
        CHECK(nonempty <= 5 * inst.g.n());
        // JSON round trip
        Esd back = esd_from_json(esd_to_json(inst.d), inst.g.n());
        CHECK(esd_to_json(back) == esd_to_json(inst.d));
    }
}

TEST_CASE("conflicts") {
    Graph p3 = path_graph(3);
    Esd d = p3_strip();
    auto as = atoms(p3, d);
    auto find = [&](Atom::Kind k) {
        for (const auto& a : as)
            if (a.kind == k) return a;
        FAIL("atom missing");
        return as[0];
    };
    CHECK(conflicts(find(Atom::Kind::EdgeBot), find(Atom::Kind::EdgeU), d));
    // two H-vertices with no H-edge between them
    Esd two = empty_esd(Graph(2), 2);
    two.eta_vertex[0] = VertexSet(2, {0});
    two.eta_vertex[1] = VertexSet(2, {1});
    auto ts = atoms(Graph(2), two);
    REQUIRE(ts.size() == 2);
    CHECK_FALSE(conflicts(ts[0], ts[1], two));

    // triangle in H: the full edge atom clashes with the triangle atom
    Esd tri = empty_esd(testing_support::complete_graph(3), 1);
    tri.triangles[0].set = VertexSet(1, {0});
    auto tas = atoms(Graph(1), tri);
    const Atom* full = nullptr;
    const Atom* t = nullptr;
    for (const auto& a : tas) {
        if (a.kind == Atom::Kind::EdgeFull && !full) full = &a;
        if (a.kind == Atom::Kind::Triangle) t = &a;
    }
    REQUIRE(full);
    REQUIRE(t);
    CHECK(conflicts(*full, *t, tri));
}

TEST_CASE("atom family of an independent set") {
    Graph p3 = path_graph(3);
    Esd d = p3_strip();
    auto as = atoms(p3, d);
    auto fam = atom_family_of_independent_set(p3, d, as, VertexSet(3, {0, 2}));
    REQUIRE(fam.size() == 1);
    CHECK(as[fam[0]].kind == Atom::Kind::EdgeFull);
    fam = atom_family_of_independent_set(p3, d, as, VertexSet(3, {1}));
    bool bot = false;
    for (int i : fam) bot = bot || as[i].kind == Atom::Kind::EdgeBot;
    CHECK(bot);
    for (int i : fam) CHECK(as[i].kind != Atom::Kind::EdgeFull);

    Graph g = testing_support::disjoint_union(path_graph(3), path_graph(2));
    auto td = trivial_esd(g);
    auto tas = atoms(g, td);
    CHECK(atom_family_of_independent_set(g, td, tas, VertexSet(5)).size() == tas.size());

    // every independent set sits inside the union of its family
    Rng rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        auto inst = testing_support::random_esd_instance(rng, 10, 4, 0.5, 0.4);
        auto all = atoms(inst.g, inst.d);
        auto i = testing_support::random_independent(inst.g, inst.g.all(), rng);
        auto f = atom_family_of_independent_set(inst.g, inst.d, all, i);
        CHECK(family_is_independent(all, f, inst.d));
        VertexSet cover(inst.g.n());
        for (int a : f) cover |= all[a].vertices;
        CHECK(i.subset_of(cover));
    }
}

TEST_CASE("restriction and peripheral vertices") {
    Graph p3 = path_graph(3);
    Esd d = p3_strip();
    CHECK(esd_to_json(restrict_esd(d, VertexSet(3))) == esd_to_json(d));
    Esd r = restrict_esd(d, VertexSet(3, {1}));
    CHECK(r.eta_edge[0].all == VertexSet(3, {0, 2}));
    CHECK(r.eta_edge[0].end_u == d.eta_edge[0].end_u);

    Graph g = testing_support::disjoint_union(path_graph(3), path_graph(2));
    auto td = trivial_esd(g);
    Esd cut = restrict_esd(td, VertexSet(5, {3, 4}));
    int empties = 0;
    for (const auto& s : cut.eta_vertex) empties += s.empty();
    CHECK(empties == 1);

    CHECK(peripheral_vertices(g, td).empty());
    CHECK(peripheral_vertices(p3, d) == VertexSet(3, {0, 2}));
    Graph p4 = path_graph(4);
    Esd wide = empty_esd(Graph(2, {{0, 1}}), 4);
    wide.eta_edge[0].all = p4.all();
    wide.eta_edge[0].end_u = VertexSet(4, {0, 1});
    wide.eta_edge[0].end_v = VertexSet(4, {3});
    REQUIRE(validate_esd(p4, wide).ok);
    auto per = peripheral_vertices(p4, wide);
    CHECK_FALSE(per.contains(0));
    CHECK_FALSE(per.contains(1));
}

TEST_CASE("shatter predicate") {
    Graph three = testing_support::disjoint_union(testing_support::disjoint_union(path_graph(2), path_graph(2)),
                                                   path_graph(2));
    CHECK(shatters(three, trivial_esd(three), {0, 2, 4}));
    Graph claw = testing_support::subdivided_claw(1);
    CHECK_FALSE(shatters(claw, trivial_esd(claw), {1, 2, 3}));
    CHECK(shatters(Graph(5), trivial_esd(Graph(5)), {0, 2, 4}));
}
