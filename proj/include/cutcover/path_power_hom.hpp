#pragma once

#include <vector>

#include "cutcover/digraph.hpp"

namespace cutcover {

// An undirected walk: step i goes between vertices[i-1] and vertices[i],
// along the arc (v[i-1], v[i]) when forward[i-1] is set, else along the
// arc (v[i], v[i-1]).
struct Walk {
    std::vector<int> vertices;
    std::vector<bool> forward;

    int steps() const { return static_cast<int>(forward.size()); }
    bool closed() const {
        return !vertices.empty() && vertices.front() == vertices.back();
    }
};

// Delta(U) = m+ - d*m-. Throws std::invalid_argument when a step does not
// follow an existing arc in the stated direction.
long long delta_of_walk(const Digraph& d, const Walk& w, int power);

struct HomResult {
    enum class Kind { Labeling, TooLong, Unbounded } kind = Kind::Labeling;
    std::vector<int> labels;  // Labeling: l(v) in {0..n-1}, arcs grow by 1..d
    Walk witness;             // TooLong: walk with Delta >= n; Unbounded: closed walk, Delta > 0
};

// Decides membership in H(P_n^d) by the iterative max-Delta labeling.
// Runs per weakly connected component; at most |V|+1 rounds each.
HomResult hom_to_path_power(const Digraph& d, int n, int power);

struct HomCheck {
    bool ok = false;
    int bad_vertex = -1;  // label out of range
    int bad_arc = -1;     // first arc with l(head)-l(tail) outside {1..d}
};

HomCheck verify_hom(const Digraph& d, int n, int power, const std::vector<int>& labels);

}  // namespace cutcover
