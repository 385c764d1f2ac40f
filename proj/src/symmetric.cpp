#include "cutcover/symmetric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cutcover/bounds.hpp"

namespace cutcover {

bool is_symmetric(const Digraph& d) {
    for (const Arc& a : d.arcs())
        if (!d.has_arc(a.head, a.tail)) return false;
    return true;
}

Digraph symmetrize(const UGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edges.size());
    for (auto [u, v] : g.edges) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(g.n, std::move(arcs));
}

namespace {

// injective map from the s-level into the adjacent level (s-1 when
// shrinking, s+1 when growing) with B(C) related to C by inclusion;
// Hall's condition holds on these levels, so Kuhn's algorithm finds a
// perfect matching on the left
std::map<SetMask, SetMask> level_matching(int k, int s, bool shrink) {
    const std::vector<SetMask> left = subsets_of_size(k, s);
    const std::vector<SetMask> right = subsets_of_size(k, shrink ? s - 1 : s + 1);
    std::map<SetMask, int> right_index;
    for (std::size_t i = 0; i < right.size(); ++i) right_index[right[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        SetMask c = left[i];
        if (shrink) {
            for (int a = 1; a <= k; ++a)
                if (set_contains(c, a)) adj[i].push_back(right_index[c & ~(SetMask{1} << (a - 1))]);
        } else {
            for (int a = 1; a <= k; ++a)
                if (!set_contains(c, a)) adj[i].push_back(right_index[c | (SetMask{1} << (a - 1))]);
        }
    }

    std::vector<int> match_left(left.size(), -1), match_right(right.size(), -1);
    std::vector<char> visited(right.size(), 0);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int w : adj[u]) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match_right[w] < 0 || self(self, match_right[w])) {
                match_left[u] = w;
                match_right[w] = static_cast<int>(u);
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < left.size(); ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, static_cast<int>(u)))
            throw std::logic_error("level matching is not perfect");
    }
    std::map<SetMask, SetMask> out;
    for (std::size_t u = 0; u < left.size(); ++u) out[left[u]] = right[match_left[u]];
    return out;
}

}  // namespace

CutCover normalize_symmetric_cover(const Digraph& d, const CutCover& c) {
    if (!is_symmetric(d)) throw std::invalid_argument("normalize: digraph is not symmetric");
    if (c.k > 20) throw std::invalid_argument("normalize: guarded to k <= 20");
    auto check = verify_cover(d, c);
    if (!check.valid)
        throw std::invalid_argument("normalize: input cover is invalid at arc " +
                                    std::to_string(check.violating_arc));
    const int half = c.k / 2;
    CutCover cur = c;

    // vertices without arcs can carry anything; park them on a fixed middle set
    const SetMask middle = full_set(c.k) >> (c.k - half);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.in_degree(v) == 0 && d.out_degree(v) == 0) cur.sets[v] = middle;

    while (true) {
        int max_size = 0, min_size = c.k;
        for (SetMask s : cur.sets) {
            max_size = std::max(max_size, set_size(s));
            min_size = std::min(min_size, set_size(s));
        }
        if (d.vertex_count() == 0) break;
        int s;
        bool shrink;
        if (max_size > half) {
            s = max_size;
            shrink = true;
        } else if (min_size < half) {
            s = min_size;
            shrink = false;
        } else {
            break;
        }
        const auto matching = level_matching(c.k, s, shrink);
        for (SetMask& m : cur.sets)
            if (set_size(m) == s) m = matching.at(m);
        auto round_check = verify_cover(d, cur);
        if (!round_check.valid)
            throw std::logic_error("normalization round broke the cover at arc " +
                                   std::to_string(round_check.violating_arc));
    }
    return cur;
}

std::vector<int> coloring_from_cover(const CutCover& c) {
    const int half = c.k / 2;
    const std::vector<SetMask> layer = middle_layer(c.k);
    std::map<SetMask, int> rank;
    for (std::size_t i = 0; i < layer.size(); ++i) rank[layer[i]] = static_cast<int>(i) + 1;
    std::vector<int> colors;
    colors.reserve(c.sets.size());
    for (SetMask s : c.sets) {
        if (set_size(s) != half)
            throw std::invalid_argument("coloring_from_cover: cover is not normalized");
        colors.push_back(rank.at(s));
    }
    return colors;
}

CutCover cover_from_coloring(const Digraph& d, const std::vector<int>& coloring, int k) {
    if (static_cast<int>(coloring.size()) != d.vertex_count())
        throw std::invalid_argument("coloring size does not match vertex count");
    for (const Arc& a : d.arcs())
        if (coloring[a.tail] == coloring[a.head])
            throw std::invalid_argument("coloring is not proper at arc " + std::to_string(a.tail) +
                                        "->" + std::to_string(a.head));
    std::vector<int> classes(coloring);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.size() > central_binomial(k))
        throw std::invalid_argument("coloring uses " + std::to_string(classes.size()) +
                                    " classes, more than M(k) = " +
                                    std::to_string(central_binomial(k)));
    const std::vector<SetMask> layer = middle_layer(k, classes.size());
    std::map<int, SetMask> assign;
    for (std::size_t i = 0; i < classes.size(); ++i) assign[classes[i]] = layer[i];
    CutCover c{k, {}};
    c.sets.reserve(coloring.size());
    for (int col : coloring) c.sets.push_back(assign.at(col));
    return c;
}

}  // namespace cutcover
