#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutcover/cover.hpp"
#include "cutcover/digraph.hpp"

namespace cutcover {

struct GeneratedInstance {
    Digraph digraph;
    std::string tag;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<int> labels;  // per-vertex: block index, layer index, ... depending on tag
};

// P_n^d: arc ij iff j - i in {1..d}
GeneratedInstance gen_path_power(int n, int d);

// TT_n = P_n^{n-1}
GeneratedInstance gen_transitive_tournament(int n);

// l blocks of size 2^(k-2); a transitive tournament inside each block and
// all arcs between consecutive blocks. Labels carry the 1-based block index.
GeneratedInstance gen_block_path(int k, int l);

// block path plus a pinch vertex v between blocks floor(l/2) and
// floor(l/2)+1 (label 0)
GeneratedInstance gen_block_path_prime(int k, int l);

// A valid k-cut cover of gen_block_path(k, l): blocks alternate between the
// two families {S+{2}: S in {3..k}} and {S+{1}: S in {3..k}}, each ordered
// by decreasing set size.
CutCover block_path_cover(int k, int l);

// Layered construction: layers 0..2^k, singleton layers up to d, then
// V_i = { w_vu : v in V_{i-1}, u in N-(v) } with N-(w_vu) = {v} + N-(v) - {u}.
// Labels carry the layer index. Throws when the predicted size exceeds
// size_limit (the growth is d^(2^k - d)).
GeneratedInstance gen_layered_indegree(int d, int k, long long size_limit = 1000000);

// predicted vertex count of gen_layered_indegree, saturating at LLONG_MAX
long long layered_indegree_size(int d, int k);

// disjoint union of two acyclic digraphs plus all arcs from the first to
// the second; labels are 0 on the lower side and 1 on the upper side
GeneratedInstance join(const Digraph& lower, const Digraph& upper);

std::string instance_meta_json(const GeneratedInstance& g);

}  // namespace cutcover
