#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "mwis/tree_oracle.hpp"

namespace mwis {

using DisperserEntry = FamilyEntry;

struct DisperserParams {
    Ratio gamma{1, 4};
    BigRational delta{0};  // delta(n) = p(gamma); sigma^8 and sigma^40 overflow 64 bits
    Ratio xi{1, 2};
    Ratio tau{1, 4};
    long long n0 = 9;
    BigRational beta{0};  // p(gamma) / 2
    // J guesses: independent sets up to this size (the lemma's bound is far above desk scale)
    int j_cap = 2;
    double j_bound = 0;  // 2 p(gamma)^-1 log n + 1, reported only
};

struct DisperserStats {
    long long j_candidates = 0;
    long long inner_entries = 0;
    long long failures = 0;  // shatter calls with no constructive answer
    long long claws_seen = 0;
};

struct Disperser {
    std::vector<DisperserEntry> entries;
    DisperserParams params;
    bool strong = true;
    DisperserStats stats;
};

struct Goodness {
    bool shrinking = false, safe = false;
    bool good() const { return shrinking && safe; }
};

Goodness is_good(const Graph& g, const WeightFn& w, const DisperserEntry& e, Ratio gamma, const BigRational& delta);
// Exact: |X|^q n^p <= (n-|A|)^q and n^p <= (n-|A|)^q for xi = p/q, every atom (and the empty one).
bool is_uniform(const Graph& g, const DisperserEntry& e, Ratio xi);

WeightFn restrict_to(const WeightFn& w, const VertexSet& i);  // w_I
VertexSet heavy_vertices(const Graph& g, const WeightFn& w, const VertexSet& i, Ratio beta);
// Smallest J inside I with heavy_vertices inside N[J].
VertexSet heavy_cover_search(const Graph& g, const WeightFn& w, const VertexSet& i, Ratio beta);
int heavy_bound(int n, Ratio beta);  // ceil(beta^-1 log2 n)

// p(sigma) per class: sigma/(4t) for Pt and CgeT, sigma^8 and sigma^40 for YgeT and LgeT.
BigRational class_p(const GraphClass& cls, Ratio sigma);
DisperserParams default_params(const GraphClass& cls, Ratio gamma, int n);

// Entries for a connected graph (local ids).
using InnerFamily = std::function<std::vector<FamilyEntry>(const Graph& comp, DisperserStats& stats)>;

// Guess J, then the heaviest component of G - N[J], then an inner entry for it.
Disperser guess_heavy(const Graph& g, const InnerFamily& inner, const DisperserParams& params);

// Families depend only on the (relabeled) graph, so they can be shared across calls.
struct FamilyCache {
    std::unordered_map<std::string, std::vector<FamilyEntry>> map;
    long long hits = 0;
};
InnerFamily cached(InnerFamily f, FamilyCache* cache);

InnerFamily pt_family();
InnerFamily longhole_family(int t);
InnerFamily claw_family(int t, const OracleOptions& opt = {});
InnerFamily lobster_family(int t, const OracleOptions& opt = {});

Disperser strong_disperser_pt(const Graph& g, Ratio gamma, int t, int j_cap = 2);
Disperser strong_disperser_longhole(const Graph& g, Ratio gamma, int t, int j_cap = 2);
// Throw ClassViolation when the pipeline meets a claw or lobster.
Disperser disperser_yget(const Graph& g, Ratio gamma, int t, int j_cap = 2, const OracleOptions& opt = {});
Disperser disperser_lget(const Graph& g, Ratio gamma, int t, int j_cap = 2, const OracleOptions& opt = {});
Disperser build_disperser(const Graph& g, const GraphClass& cls, Ratio gamma, int j_cap = 2,
                          const OracleOptions& opt = {}, FamilyCache* cache = nullptr);

// index of an entry that is (gamma, delta)-good for w_I
std::optional<int> good_entry(const Graph& g, const WeightFn& w, const VertexSet& i, const Disperser& d);

struct UniformParams {
    Ratio xi;
    Ratio tau;
};
UniformParams uniform_params(const GraphClass& cls);
// |N[v]| <= tau n^xi for every v
bool degree_condition(const Graph& g, Ratio xi, Ratio tau);

struct UniformUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Pt, CgeT: N[Q] with a trivial ESD. YgeT, LgeT: first uniform member of the oracle family.
// check_degree = false skips the precondition (the entry may then fail is_uniform).
DisperserEntry uniform_disperser(const Graph& g, const GraphClass& cls, bool check_degree = true,
                                 const OracleOptions& opt = {});

nlohmann::json entry_to_json(const DisperserEntry& e);
nlohmann::json disperser_to_json(const Disperser& d);
DisperserEntry entry_from_json(const nlohmann::json& j, const Graph& g);

}  // namespace mwis
