#pragma once

#include "cutcover/cover.hpp"
#include "cutcover/digraph.hpp"

namespace cutcover {

// Polynomial cover constructions. Each checks its class precondition and
// throws std::invalid_argument (reporting an offending vertex) when it
// fails; every output passes verify_cover.

// Greedy coloring along a topological order with the floor(k/2)-antichain
// as the palette. Needs max indegree <= M(k)-1.
CutCover greedy_antichain_cover(const Digraph& d, int k);

// Two-sided greedy: V- = vertices of indegree <= dminus gets dminus+1
// colors, the rest (outdegree <= dplus, processed in reverse topological
// order) gets dplus+1 disjoint colors; both palettes map into the
// floor(k/2)-antichain. Needs dminus + dplus <= M(k)-2.
CutCover split_cover(const Digraph& d, int dminus, int dplus, int k);

// D(2,1) with k = 3: V- colored from the 2-sets {1,2},{1,3},{2,3}; each
// V+ vertex takes the singleton complement of its single out-neighbor.
CutCover cover_class_21(const Digraph& d);

// D(5,2) with k = 4: V- colored from the six 2-subsets of {1..4} with a
// temporary-color rule keeping the two V- out-neighbors of a V+ vertex
// from using complementary sets; V+ gets singletons.
CutCover cover_class_52(const Digraph& d);

// D(3,3) with k = 4: V- from {1,4},{2,4},{3,4} plus {1,2,3} only when
// forced; V+ from {1,2},{2,3},{1,3} plus {4} only when forced.
CutCover cover_class_33(const Digraph& d);

}  // namespace cutcover
