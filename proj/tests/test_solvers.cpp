#include "doctest.h"

#include "mwis/patterns.hpp"
#include "mwis/solvers.hpp"
#include "support.hpp"

using namespace mwis;
using testing_support::best_independent;

namespace {

Weight opt(const Graph& g, const WeightFn& w) { return weight_of(w, best_independent(g, w, g.all())); }

// (1 - eps) opt <= got, exactly
bool within(Weight got, Weight best, Ratio eps) {
    return static_cast<__int128>(got) * eps.den >= static_cast<__int128>(best) * (eps.den - eps.num);
}

std::optional<Graph> h_free_sample(const Graph& h, int n, double p, Rng& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        Graph g = random_graph(n, p, rng);
        if (!find_induced_copy(g, h)) return g;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("brute force") {
    auto e = mwis_bruteforce(Graph(5), WeightFn{1, 2, 3, 4, 5});
    CHECK(e.weight == 15);
    auto k = mwis_bruteforce(testing_support::complete_graph(4), WeightFn{3, 9, 2, 9});
    CHECK(k.weight == 9);
    CHECK(k.set == VertexSet(4, {1}));  // ties go to the smaller vertex
    CHECK(mwis_bruteforce(cycle_graph(5), WeightFn(5, 1)).weight == 2);
    CHECK(mwis_bruteforce(Graph(0), WeightFn{}).weight == 0);
    CHECK(mwis_bruteforce(Graph(3), WeightFn{0, 0, 0}).set == VertexSet(3, {0, 1, 2}));
}

TEST_CASE("rescaling") {
    Graph e4(4);
    auto r = rescale_weights(e4, WeightFn(4, 7), Ratio(1, 2));
    CHECK(r.w == WeightFn(4, 8));
    CHECK(r.cert.max_after == 8);
    CHECK(r.cert.discarded == 0);

    auto one = rescale_weights(Graph(1), WeightFn{5}, Ratio(1, 4));
    CHECK(one.w == WeightFn{4});

    auto skew = rescale_weights(Graph(2), WeightFn{1, 1000000}, Ratio(1, 2));
    CHECK(skew.w == WeightFn{0, 4});
    CHECK(skew.cert.discarded == 1);
    CHECK(skew.kept == VertexSet(2, {1}));
    CHECK_THROWS(rescale_weights(Graph(2), WeightFn{1, 1}, Ratio(2, 5)));
}

TEST_CASE("qptas") {
    auto e = qptas(Graph(4), WeightFn{1, 2, 3, 4}, Ratio(1, 2), GraphClass::pt(5));
    CHECK(e.weight == 10);
    auto k2 = qptas(path_graph(2), WeightFn{5, 3}, Ratio(1, 4), GraphClass::pt(5));
    CHECK(k2.weight == 5);

    Rng rng(21);
    for (int rep = 0; rep < 25; ++rep) {
        Graph g = random_class_graph(12, 0.3, GraphClass::pt(6), rng);
        WeightFn w = random_weights(12, 1, 30, rng);
        for (Ratio eps : {Ratio(1, 2), Ratio(1, 4)}) {
            auto r = qptas(g, w, eps, GraphClass::pt(6));
            CHECK(is_independent(g, r.set));
            CHECK(weight_of(w, r.set) == r.weight);
            CHECK(within(r.weight, opt(g, w), eps));
        }
    }
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_class_graph(11, 0.3, GraphClass::hole(5), rng);
        WeightFn w = random_weights(11, 1, 30, rng);
        auto r = qptas(g, w, Ratio(1, 4), GraphClass::hole(5));
        CHECK(is_independent(g, r.set));
        CHECK(within(r.weight, opt(g, w), Ratio(1, 4)));
    }
}

TEST_CASE("subexp exact") {
    Rng rng(23);
    // at most n0 vertices: the base case alone
    Graph small = random_class_graph(8, 0.4, GraphClass::pt(5), rng);
    WeightFn sw = random_weights(8, 1, 9, rng);
    CHECK(subexp_exact(small, sw, GraphClass::pt(5)).weight == opt(small, sw));

    Graph u = testing_support::disjoint_union(cycle_graph(5), path_graph(4));
    WeightFn uw{1, 2, 3, 4, 5, 6, 7, 8, 9};
    auto ur = subexp_exact(u, uw, GraphClass::pt(5));
    CHECK(ur.weight == opt(u, uw));
    CHECK(ur.set == best_independent(u, uw, u.all()));

    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_class_graph(16, 0.25, GraphClass::pt(5), rng);
        WeightFn w = random_weights(16, 0, 20, rng);
        auto cfg = subexp_config(GraphClass::pt(5), rep % 2 == 1);
        cfg.n0 = 4;
        auto r = subexp_exact(g, w, cfg);
        CHECK(r.weight == opt(g, w));
        CHECK(r.set == best_independent(g, w, g.all()));
    }
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_class_graph(14, 0.3, GraphClass::hole(5), rng);
        WeightFn w = random_weights(14, 0, 20, rng);
        CHECK(subexp_exact(g, w, GraphClass::hole(5)).weight == opt(g, w));
    }
}

TEST_CASE("H-free shapes") {
    auto p3 = analyse_h(path_graph(3));
    CHECK(p3.components.size() == 1);
    auto claw = analyse_h(testing_support::subdivided_claw(2));
    CHECK(claw.claw_t >= 2);
    CHECK_THROWS(analyse_h(cycle_graph(4)));

    Graph two_p3 = testing_support::disjoint_union(path_graph(3), path_graph(3));
    Graph g = testing_support::disjoint_union(path_graph(3), testing_support::complete_graph(3));
    bool all = false;
    auto emb = maximal_embedding(g, g.all(), two_p3, analyse_h(two_p3), &all);
    CHECK_FALSE(all);
    CHECK(emb.size() == 3);
}

TEST_CASE("H-free solvers") {
    Rng rng(29);
    Graph p2 = path_graph(2);
    for (int n : {1, 4, 7}) {
        WeightFn w = random_weights(n, 1, 9, rng);
        CHECK(mwis_hfree_approx(Graph(n), w, Ratio(1, 2), p2).weight == weight_of(w, Graph(n).all()));
        CHECK(mwis_hfree_exact(Graph(n), w, p2).weight == weight_of(w, Graph(n).all()));
    }

    Graph two_p3 = testing_support::disjoint_union(path_graph(3), path_graph(3));
    Graph g = testing_support::disjoint_union(path_graph(3), testing_support::complete_graph(3));
    WeightFn w{2, 5, 2, 1, 1, 3};
    CHECK(mwis_hfree_exact(g, w, two_p3).weight == 8);
    CHECK(within(mwis_hfree_approx(g, w, Ratio(1, 4), two_p3).weight, 8, Ratio(1, 4)));

    // G = H itself
    WeightFn hw{4, 1, 2, 7, 3, 1};
    CHECK(mwis_hfree_exact(two_p3, hw, two_p3).weight == opt(two_p3, hw));

    Graph fork = testing_support::subdivided_claw(1);
    for (const Graph& h : {path_graph(4), two_p3, fork}) {
        for (int rep = 0; rep < 6; ++rep) {
            auto s = h_free_sample(h, 12, 0.35, rng);
            if (!s) continue;
            WeightFn rw = random_weights(12, 1, 15, rng);
            const Weight best = opt(*s, rw);
            CHECK(mwis_hfree_exact(*s, rw, h).weight == best);
            auto a = mwis_hfree_approx(*s, rw, Ratio(1, 4), h);
            CHECK(is_independent(*s, a.set));
            CHECK(within(a.weight, best, Ratio(1, 4)));
        }
    }
}

TEST_CASE("tree decompositions") {
    Rng rng(37);
    auto check = [](const Graph& g, int t) {
        auto td = treedecomp_longhole(g, t);
        CHECK(validate_tree_decomposition(g, td).ok());
        CHECK(td.width <= longhole_width_bound(g, t));
    };
    check(random_tree(20, 3, rng), 4);
    check(cycle_graph(4), 5);
    check(path_graph(15), 4);
    check(Graph(3), 4);
    for (int rep = 0; rep < 10; ++rep) check(random_class_graph(14, 0.25, GraphClass::hole(5), rng), 5);

    // a broken decomposition is caught
    Graph p3 = path_graph(3);
    TreeDecomposition bad{Graph(2, {{0, 1}}), {VertexSet(3, {0, 1}), VertexSet(3, {2})}, 1};
    auto rep = validate_tree_decomposition(p3, bad);
    CHECK_FALSE(rep.edge_coverage);
    CHECK(rep.vertex_coverage);
    CHECK(longhole_width_bound(cycle_graph(4), 5) == 3 * 4 * 3);
}
