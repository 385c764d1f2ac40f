#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cutcover {

struct Arc {
    int tail = 0;
    int head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable simple digraph on vertices 0..n-1. The arc list is kept in
// lexicographic (tail, head) order; self-loops and duplicate arcs are
// rejected at construction. Opposite arc pairs are legal (symmetric
// digraphs are valid inputs elsewhere) but tracked by a flag.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int i) const { return arcs_[i]; }

    std::span<const int> out_neighbors(int v) const;
    std::span<const int> in_neighbors(int v) const;
    int out_degree(int v) const { return out_off_[v + 1] - out_off_[v]; }
    int in_degree(int v) const { return in_off_[v + 1] - in_off_[v]; }

    bool has_arc(int u, int v) const { return arc_index(u, v) >= 0; }
    int arc_index(int u, int v) const;  // position in canonical order, -1 if absent
    bool is_antisymmetric() const { return antisymmetric_; }

    Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_off_, out_adj_;
    std::vector<int> in_off_, in_adj_;
    bool antisymmetric_ = true;
};

struct TopoOrder {
    bool acyclic = false;
    std::vector<int> order;  // lexicographically smallest topological order when acyclic
    std::vector<int> cycle;  // a directed cycle (vertex sequence, no repeat) otherwise
};

TopoOrder is_acyclic(const Digraph& d);

// Text format: '#' comment lines, a "vertices N" header, then one
// "u v" arc per line. Parse errors carry the offending line number.
Digraph read_digraph(const std::string& text);
std::string write_digraph(const Digraph& d);
std::string write_dot(const Digraph& d, const std::string& name = "D");

}  // namespace cutcover
