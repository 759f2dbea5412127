#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwis/dispersers.hpp"

namespace mwis {

struct SolveStats {
    long long nodes = 0;
    int depth = 0;
    long long matching_calls = 0;
    long long disperser_entries = 0;
    long long memo_hits = 0;
    long long uniform_calls = 0;    // recursion steps that used a uniform disperser
    long long fallback_branches = 0;  // uniform disperser unavailable, branched instead
    long long degree_branches = 0;
    double wall_ms = 0;
    void merge(const SolveStats& o);
};

struct SolveResult {
    VertexSet set;
    Weight weight = 0;
    SolveStats stats;
};

// Tie-break shared by every exact solver: more weight wins; on equal weight the set that
// contains the smallest vertex of the symmetric difference wins.
bool better_solution(const VertexSet& a, Weight wa, const VertexSet& b, Weight wb);

SolveResult mwis_bruteforce(const Graph& g, const WeightFn& w, int cap = 40);

struct RescaleCertificate {
    Weight max_before = 0, max_after = 0;
    BigRational factor;  // new = floor(old * factor)
    int discarded = 0;
};
struct Rescaled {
    WeightFn w;      // same ids; discarded vertices get 0
    VertexSet kept;  // positive after rounding
    RescaleCertificate cert;
};
// max weight becomes n/eps; 1/eps must be an integer
Rescaled rescale_weights(const Graph& g, const WeightFn& w, Ratio eps);

struct QptasConfig {
    Ratio eps{1, 4};        // user-facing
    int internal_factor = 4;  // the recursion runs with eps / internal_factor
    GraphClass cls = GraphClass::pt(5);
    int j_cap = 2;
    OracleOptions oracle;
    // filled by qptas_config
    Ratio eps_internal;
    BigRational m;
    Ratio gamma;
    BigRational delta;
};
QptasConfig qptas_config(int n, Ratio eps, const GraphClass& cls, int internal_factor = 4, int j_cap = 2);

SolveResult qptas(const Graph& g, const WeightFn& w, const QptasConfig& cfg);
SolveResult qptas(const Graph& g, const WeightFn& w, Ratio eps, const GraphClass& cls);

struct SubexpConfig {
    GraphClass cls = GraphClass::pt(5);
    Ratio xi{1, 2};
    Ratio tau{1, 4};
    long long n0 = 9;
    // Also use the (possibly non-uniform) disperser when the degree test fails. Still exact.
    bool force_disperser = false;
    int x_cap = 14;  // 2^|X| independent Y guesses; above this, branch instead
    OracleOptions oracle;
};
SubexpConfig subexp_config(const GraphClass& cls, bool force_disperser = false);
SolveResult subexp_exact(const Graph& g, const WeightFn& w, const SubexpConfig& cfg);
SolveResult subexp_exact(const Graph& g, const WeightFn& w, const GraphClass& cls);

// H with every component a path or subdivided claw.
struct HShape {
    int claw_t = 1;  // H is an induced subgraph of the claw with three legs of this length
    std::vector<VertexSet> components;
};
HShape analyse_h(const Graph& h);
// Maximal family of H-components (in order) embedded together in G[scope]; returns the embedding.
VertexSet maximal_embedding(const Graph& g, const VertexSet& scope, const Graph& h, const HShape& shape,
                            bool* all_embedded = nullptr);

struct HFreeConfig {
    int j_cap = 2;
    int internal_factor = 4;
    bool force_disperser = false;
    long long n0 = 0;  // > 0 replaces the subexp base-case size
    OracleOptions oracle;
};
SolveResult mwis_hfree_approx(const Graph& g, const WeightFn& w, Ratio eps, const Graph& h,
                              const HFreeConfig& cfg = {});
SolveResult mwis_hfree_exact(const Graph& g, const WeightFn& w, const Graph& h, const HFreeConfig& cfg = {});

struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;
    int width = -1;
};
struct TdReport {
    bool vertex_coverage = true, edge_coverage = true, subtree = true, is_tree = true;
    bool ok() const { return vertex_coverage && edge_coverage && subtree && is_tree; }
};
TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
// separators N[Q], |Q| < t, balanced for weights on the active boundary
TreeDecomposition treedecomp_longhole(const Graph& g, int t);
int longhole_width_bound(const Graph& g, int t);  // 3 (t-1) (Delta+1)

nlohmann::json stats_to_json(const SolveStats& s, bool with_time);

}  // namespace mwis
