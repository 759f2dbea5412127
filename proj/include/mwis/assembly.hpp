#pragma once

#include <vector>

#include "mwis/esd.hpp"
#include "mwis/matching.hpp"

namespace mwis {

#ifndef MWIS_CHECKED
#define MWIS_CHECKED 1
#endif
inline constexpr bool kChecked = MWIS_CHECKED != 0;

// per_atom[i] is an independent subset of all_atoms[i].vertices
struct AssemblyInput {
    const Graph* g = nullptr;
    const WeightFn* w = nullptr;
    const Esd* d = nullptr;
    std::vector<Atom> all_atoms;
    std::vector<VertexSet> per_atom;
};

// H' has the H-vertices 0..k-1 followed by x_e = k + e.
struct Auxiliary {
    int n = 0;
    std::vector<WeightedEdge> edges;
    Weight offset = 0;
    // w' by role, indexed by H-edge
    std::vector<std::int64_t> w_edge, w_xu, w_xv;
};

struct AssemblyOutput {
    Auxiliary aux;
    Matching matching;
    std::vector<int> family;  // atom indices
    VertexSet result;
    Weight weight = 0;
};

Auxiliary build_auxiliary(const AssemblyInput& in);
// H'-edges are given as (a, b) pairs in H' ids.
std::vector<std::pair<Vertex, Vertex>> atoms_to_matching(const AssemblyInput& in, const std::vector<int>& family);
std::vector<int> matching_to_atoms(const AssemblyInput& in, const std::vector<std::pair<Vertex, Vertex>>& m);
std::int64_t aux_weight(const Auxiliary& aux, const std::vector<std::pair<Vertex, Vertex>>& m);
Weight family_weight(const AssemblyInput& in, const std::vector<int>& family);

AssemblyOutput assemble(const AssemblyInput& in);

// Brute force over independent atom families; |atoms| <= cap.
Weight best_family_weight(const AssemblyInput& in, int cap = 12);

}  // namespace mwis
