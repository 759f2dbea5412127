#include "doctest.h"

#include "mwis/dispersers.hpp"
#include "mwis/patterns.hpp"
#include "support.hpp"

using namespace mwis;

namespace {

// every nonempty independent set of a small graph
std::vector<VertexSet> independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.n();
    for (unsigned m = 1; m < (1u << n); ++m) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) s.insert(v);
        if (is_independent(g, s)) out.push_back(s);
    }
    return out;
}

void check_strong(const Graph& g, const Disperser& d) {
    for (const auto& e : d.entries) CHECK(validate_esd(g, e.esd, g.all() - e.x).ok);
    for (const auto& i : independent_sets(g)) {
        auto k = good_entry(g, unit_weights(g), i, d);
        CHECK(k.has_value());
    }
}

// root plus up to three children per vertex, down to the given depth
Graph shallow_tree(int depth, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> layer{0};
    int n = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (int c = 1 + static_cast<int>(rng() % 3); c > 0; --c) {
                edges.emplace_back(v, n);
                next.push_back(n++);
            }
        layer = next;
    }
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("goodness") {
    Graph p3 = path_graph(3);
    WeightFn w{1, 1, 1};
    // X = everything, nothing left: shrinking, not safe unless gamma = 1
    auto all = trivial_entry(p3, p3.all(), "t");
    CHECK(is_good(p3, w, all, Ratio(1), BigRational(1, 2)).good());
    CHECK_FALSE(is_good(p3, w, all, Ratio(1, 2), BigRational(1, 2)).safe);

    // X empty, single atom of full weight: safe, never shrinking for delta > 0
    auto none = trivial_entry(p3, VertexSet(3), "t");
    auto g0 = is_good(p3, w, none, Ratio(0), BigRational(1, 4));
    CHECK(g0.safe);
    CHECK_FALSE(g0.shrinking);
    CHECK(is_good(p3, w, none, Ratio(0), BigRational(0)).good());

    // lone vertices with no neighbours are exempt from shrinking
    Graph two(2);
    auto split = trivial_entry(two, VertexSet(2), "t");
    CHECK(is_good(two, WeightFn{1, 1}, split, Ratio(0), BigRational(2, 3)).good());

    // K2, guessing one end: the other end is a lone atom, so (0, 1/2)-good for (0, 1)
    Graph k2 = path_graph(2);
    auto guess = trivial_entry(k2, VertexSet(2, {0}), "t");
    CHECK(is_good(k2, WeightFn{0, 1}, guess, Ratio(0), BigRational(1, 2)).good());
    CHECK_FALSE(is_good(k2, WeightFn{1, 1}, guess, Ratio(0), BigRational(1, 2)).safe);
    auto whole = trivial_entry(k2, VertexSet(2), "t");
    CHECK_FALSE(is_good(k2, WeightFn{0, 1}, whole, Ratio(0), BigRational(1, 2)).shrinking);
}

TEST_CASE("uniformity") {
    Graph p9 = path_graph(9);
    CHECK(is_uniform(p9, trivial_entry(p9, VertexSet(9), "t"), Ratio(1, 2)) == false);  // one atom of size n
    Graph e9(9);
    CHECK(is_uniform(e9, trivial_entry(e9, VertexSet(9), "t"), Ratio(1, 2)));
    CHECK_FALSE(is_uniform(e9, trivial_entry(e9, e9.all(), "t"), Ratio(1, 2)));
    // X = middle vertex of P9: atoms of size 4, |X| = 1; 1 * 3 <= 5 and 3 <= 5
    CHECK(is_uniform(p9, trivial_entry(p9, VertexSet(9, {4}), "t"), Ratio(1, 2)));
    CHECK_THROWS(is_uniform(p9, trivial_entry(p9, VertexSet(9), "t"), Ratio(1)));
}

TEST_CASE("heavy vertices") {
    Graph p5 = path_graph(5);
    WeightFn w(5, 1);
    VertexSet i(5, {0, 2, 4});
    CHECK(heavy_vertices(p5, w, i, Ratio(0)) == p5.all());
    CHECK(heavy_vertices(p5, w, VertexSet(5, {2}), Ratio(1)) == VertexSet(5, {1, 2, 3}));
    // star: the centre sees every leaf
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    VertexSet leaves(5, {1, 2, 3, 4});
    CHECK(heavy_vertices(star, w, leaves, Ratio(1)) == VertexSet(5, {0}));
    CHECK(heavy_vertices(star, w, leaves, Ratio(1, 4)) == star.all());
    CHECK_THROWS(heavy_vertices(p5, w, VertexSet(5, {0, 1}), Ratio(1, 2)));
    CHECK_THROWS(heavy_vertices(p5, WeightFn(5, 0), i, Ratio(1, 2)));

    auto j = heavy_cover_search(star, w, leaves, Ratio(1, 4));
    CHECK(j.size() == 4);
    CHECK(heavy_cover_search(star, w, leaves, Ratio(1)).size() == 1);
    CHECK(heavy_bound(12, Ratio(1, 4)) == 15);  // ceil(4 log2 12)
    CHECK(heavy_bound(1, Ratio(1, 4)) == 1);
    CHECK(heavy_bound(16, Ratio(1, 2)) == 8);

    // the search agrees with an exhaustive minimum on random instances
    Rng rng(31);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = random_graph(10, 0.3, rng);
        auto ind = testing_support::random_independent(g, g.all(), rng);
        if (ind.empty()) continue;
        WeightFn rw = random_weights(10, 1, 6, rng);
        Ratio beta(1, 1 + static_cast<int>(rng() % 5));
        auto z = heavy_vertices(g, rw, ind, beta);
        auto found = heavy_cover_search(g, rw, ind, beta);
        CHECK(found.subset_of(ind));
        CHECK(z.subset_of(closed_neighborhood(g, found)));
        const auto c = ind.to_vector();
        int best = c.size() + 1;
        for (unsigned m = 0; m < (1u << c.size()); ++m) {
            VertexSet s(10);
            for (std::size_t a = 0; a < c.size(); ++a)
                if (m >> a & 1) s.insert(c[a]);
            if (z.subset_of(closed_neighborhood(g, s))) best = std::min(best, s.size());
        }
        CHECK(found.size() == best);
        CHECK(found.size() <= heavy_bound(10, beta));
    }
}

TEST_CASE("strong dispersers on small graphs") {
    Graph one(1);
    auto d1 = strong_disperser_pt(one, Ratio(1, 4), 5);
    check_strong(one, d1);

    Rng rng(44);
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = random_class_graph(9, 0.35, GraphClass::pt(4), rng);  // cographs
        if (!is_connected(g, g.all())) continue;
        check_strong(g, strong_disperser_pt(g, Ratio(1, 4), 4));
    }
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = random_class_graph(9, 0.35, GraphClass::hole(5), rng);
        if (!is_connected(g, g.all())) continue;
        check_strong(g, strong_disperser_longhole(g, Ratio(1, 4), 5));
    }
    check_strong(cycle_graph(4), strong_disperser_longhole(cycle_graph(4), Ratio(1, 4), 5));
    for (int rep = 0; rep < 8; ++rep) {
        Graph g = line_graph(random_graph(6, 0.5, rng));
        if (g.n() == 0 || g.n() > 14 || !is_connected(g, g.all())) continue;
        check_strong(g, disperser_yget(g, Ratio(1, 4), 1));
    }
    auto lg = strong_disperser_longhole(path_graph(6), Ratio(1, 4), 4);  // chordal
    check_strong(path_graph(6), lg);
}

TEST_CASE("claw and lobster pipelines") {
    Rng rng(7);
    auto inst = planted_claw_instance(1, 0, rng);
    OracleOptions opt;
    opt.tree_cap = 40;
    CHECK_THROWS_AS(disperser_yget(inst.g, Ratio(1, 4), 1, 2, opt), ClassViolation);

    Graph k4 = testing_support::complete_graph(4);
    auto d = disperser_lget(k4, Ratio(1, 4), 1);
    check_strong(k4, d);
}

TEST_CASE("uniform disperser bounds") {
    Rng rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = shallow_tree(4, rng);  // diameter at most 8, so P10-free
        REQUIRE(freeness_check(g, GraphClass::pt(10)).free);
        auto e = uniform_disperser(g, GraphClass::pt(10), false);
        CHECK(validate_esd(g, e.esd, g.all() - e.x).ok);
        for (const auto& a : atoms(g, e.esd)) CHECK(4 * a.vertices.size() <= 3 * g.n());
    }
    CHECK_THROWS_AS(uniform_disperser(Graph(2), GraphClass::pt(5)), PreconditionError);
    // a star breaks the degree condition
    Graph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}});
    CHECK_FALSE(degree_condition(star, Ratio(1, 2), Ratio(1, 4)));
    CHECK_THROWS_AS(uniform_disperser(star, GraphClass::pt(5)), PreconditionError);
}

TEST_CASE("entry json round trip") {
    Rng rng(3);
    Graph g = random_class_graph(9, 0.35, GraphClass::pt(5), rng);
    for (const auto& e : build_disperser(g, GraphClass::pt(5), Ratio(1, 4)).entries) {
        auto back = entry_from_json(entry_to_json(e), g);
        CHECK(back.x == e.x);
        CHECK(esd_to_json(back.esd) == esd_to_json(e.esd));
    }
}
