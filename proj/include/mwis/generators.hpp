#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mwis/graph.hpp"
#include "mwis/patterns.hpp"

namespace mwis {

using Rng = std::mt19937_64;

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph random_graph(int n, double p, Rng& rng);
// trees with every degree <= max_degree (0 = unbounded)
Graph random_tree(int n, int max_degree, Rng& rng);
// interval graph from random intervals of length <= span on [0, n)
Graph random_interval_graph(int n, int span, Rng& rng);
Graph random_split_graph(int n, Rng& rng);
Graph line_graph(const Graph& base);
// Random graph pushed into the class by flipping pairs inside witnesses.
// Throws if it fails to converge in `max_flips`.
Graph random_class_graph(int n, double p, const GraphClass& cls, Rng& rng, int max_flips = 4000);
WeightFn random_weights(int n, Weight lo, Weight hi, Rng& rng);

// "path:N", "cycle:N", "random:N:P", "tree:N[:D]", "interval:N[:S]", "split:N",
// "line:M:P", "class:N:P:<class>"; P is a rational like 1/3.
// Weights are uniform in [wmin, wmax].
WeightedGraph generate(const std::string& spec, std::uint64_t seed, Weight wmin = 1, Weight wmax = 1);

}  // namespace mwis
