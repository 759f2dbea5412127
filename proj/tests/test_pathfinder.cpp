#include "doctest.h"

#include "mwis/generators.hpp"
#include "mwis/pathfinder.hpp"
#include "mwis/patterns.hpp"
#include "support.hpp"

using namespace mwis;

TEST_CASE("gyarfas family on K2 and random graphs") {
    Graph k2 = path_graph(2);
    auto fam = gyarfas_family(k2, 0);
    CHECK(std::find(fam.begin(), fam.end(), Path{}) != fam.end());
    CHECK(std::find(fam.begin(), fam.end(), Path{0}) != fam.end());

    Rng rng(2);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_class_graph(12, 0.3, GraphClass::pt(6), rng);
        if (!is_connected(g, g.all())) continue;
        Vertex u = static_cast<Vertex>(rng() % g.n());
        auto f = gyarfas_family(g, u);
        CHECK(f.size() <= static_cast<std::size_t>(g.n() * g.n()));
        for (const auto& q : f) {
            if (q.empty()) continue;
            CHECK(q.front() == u);
            CHECK(is_induced_path(g, path_set(g, q)));
            CHECK(q.size() < 6);  // P6-free
        }
    }
    CHECK_THROWS(gyarfas_family(Graph(3), 0));
}

TEST_CASE("gyarfas select: P4 and a star") {
    Graph p4 = path_graph(4);
    WeightFn unit(4, 1);
    auto a = gyarfas_select(p4, 0, unit, Ratio(1, 4));
    CHECK(a.ok());
    CHECK(a.path.empty());
    auto b = gyarfas_select(p4, 0, unit, Ratio(1, 3));
    CHECK(b.ok());
    CHECK(b.path == Path{0});

    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    for (Ratio al : {Ratio(1, 10), Ratio(1, 4), Ratio(2, 5)}) {
        auto c = gyarfas_select(star, 0, WeightFn(5, 1), al);
        CHECK(c.ok());
        CHECK(c.path.size() <= 1);
        CHECK(leq_scaled(c.level_max.back(), Ratio(1) - al, 5));
    }
    CHECK_THROWS(gyarfas_select(p4, 0, unit, Ratio(1, 2)));
}

TEST_CASE("gyarfas construct meets the same certificate") {
    Rng rng(6);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = random_graph(14, 0.25, rng);
        if (!is_connected(g, g.all())) continue;
        WeightFn w = random_weights(14, 0, 10, rng);
        w[0] += 1;
        Ratio al(1 + static_cast<int>(rng() % 4), 10);
        auto c = gyarfas_construct(g, 0, w, al);
        CHECK(check_gyarfas(g, 0, w, al, c.path).ok());
        CHECK(gyarfas_select(g, 0, w, al).ok());
    }
}

TEST_CASE("long hole family and separators") {
    Rng rng(12);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_class_graph(12, 0.3, GraphClass::hole(5), rng);
        if (!is_connected(g, g.all())) continue;
        auto fam = long_hole_family(g, 5);
        CHECK(fam.size() <= static_cast<std::size_t>(2 * g.n() * g.n()));
        for (const auto& q : fam) CHECK(q.size() <= 4);
        WeightFn w = random_weights(g.n(), 1, 5, rng);
        auto sep = long_hole_select(g, 5, w);
        CHECK(hole_balanced(g, w, sep.path));
        CHECK(4 * max_component_weight(g, w, g.all() - closed_neighborhood(g, path_set(g, sep.path))) <=
              3 * weight_of(w, g.all()));
    }

    // small diameter: nothing gets cut
    Graph k4 = testing_support::complete_graph(4);
    auto gf = gyarfas_family(k4, 0);
    auto lf = long_hole_family(k4, 5);
    for (const auto& q : gf) CHECK(std::find(lf.begin(), lf.end(), q) != lf.end());
    CHECK(std::find(lf.begin(), lf.end(), Path{0}) != lf.end());

    Graph c4 = cycle_graph(4);
    auto s4 = long_hole_select(c4, 5, WeightFn(4, 1));
    CHECK(s4.path.size() <= 4);
    CHECK(s4.max_component <= 3);

    for (int n : {5, 9, 16}) {
        Graph p = path_graph(n);
        auto s = long_hole_select(p, 4, WeightFn(n, 1));
        CHECK(4 * s.max_component <= 3 * n);
    }

    auto one = long_hole_select(Graph(1), 4, WeightFn(1, 1));
    CHECK(one.max_component == 0);
    CHECK(one.path.size() <= 1);
}
