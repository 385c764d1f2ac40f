#pragma once

#include <vector>

#include "cutcover/cover.hpp"
#include "cutcover/digraph.hpp"

namespace cutcover {

struct UGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, simple
};

bool is_symmetric(const Digraph& d);

// every edge becomes a pair of opposite arcs
Digraph symmetrize(const UGraph& g);

// Rewrites a valid cover of a symmetric digraph so that every
// characteristic set has size floor(k/2). One extreme level of the subset
// lattice is retired per round through a system of distinct
// representatives (bipartite matching into the next level); the potential
// sum |  |C(v)| - floor(k/2) | drops every round. Guarded to k <= 20.
CutCover normalize_symmetric_cover(const Digraph& d, const CutCover& c);

// Normalized cover -> proper coloring with at most M(k) colors (1-based,
// the lexicographic rank of each middle-layer set).
std::vector<int> coloring_from_cover(const CutCover& c);

// Proper coloring with at most M(k) classes -> cover over the
// floor(k/2)-antichain.
CutCover cover_from_coloring(const Digraph& d, const std::vector<int>& coloring, int k);

}  // namespace cutcover
