#include "cutcover/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "cutcover/bounds.hpp"

namespace cutcover {

namespace {

std::vector<int> topo_or_throw(const Digraph& d, const char* who) {
    TopoOrder t = is_acyclic(d);
    if (!t.acyclic) throw std::invalid_argument(std::string(who) + ": input digraph is cyclic");
    return t.order;
}

// V- = vertices of indegree <= dminus; everything else must have
// outdegree <= dplus
std::vector<char> split_sides(const Digraph& d, int dminus, int dplus, const char* who) {
    std::vector<char> plus_side(d.vertex_count(), 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.in_degree(v) > dminus) {
            plus_side[v] = 1;
            if (d.out_degree(v) > dplus)
                throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                            " has indegree " + std::to_string(d.in_degree(v)) +
                                            " and outdegree " + std::to_string(d.out_degree(v)));
        }
    return plus_side;
}

int first_free(const std::vector<SetMask>& palette, const std::vector<char>& used) {
    for (std::size_t i = 0; i < palette.size(); ++i)
        if (!used[i]) return static_cast<int>(i);
    return -1;
}

}  // namespace

CutCover greedy_antichain_cover(const Digraph& d, int k) {
    if (k < 1 || k > 30) throw std::invalid_argument("k out of range (1..30)");
    const auto order = topo_or_throw(d, "greedy_antichain_cover");
    const std::uint64_t mk = central_binomial(k);
    int max_indeg = 0;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (static_cast<std::uint64_t>(d.in_degree(v)) > mk - 1)
            throw std::invalid_argument("greedy_antichain_cover: vertex " + std::to_string(v) +
                                        " has indegree " + std::to_string(d.in_degree(v)) +
                                        " > M(k)-1 = " + std::to_string(mk - 1));
        max_indeg = std::max(max_indeg, d.in_degree(v));
    }
    // the greedy never reaches past the first max_indeg+1 palette entries
    const std::vector<SetMask> palette = middle_layer(k, static_cast<std::size_t>(max_indeg) + 1);
    std::vector<int> color(d.vertex_count(), -1);
    std::vector<char> used(palette.size(), 0);
    for (int v : order) {
        std::fill(used.begin(), used.end(), 0);
        for (int u : d.in_neighbors(v)) used[color[u]] = 1;
        color[v] = first_free(palette, used);
    }
    CutCover c{k, std::vector<SetMask>(d.vertex_count())};
    for (int v = 0; v < d.vertex_count(); ++v) c.sets[v] = palette[color[v]];
    return c;
}

CutCover split_cover(const Digraph& d, int dminus, int dplus, int k) {
    if (k < 1 || k > 30) throw std::invalid_argument("k out of range (1..30)");
    if (dminus < -1 || dplus < -1) throw std::invalid_argument("degree bounds must be >= -1");
    const auto order = topo_or_throw(d, "split_cover");
    if (static_cast<long long>(dminus) + dplus + 2 > static_cast<long long>(central_binomial(k)))
        throw std::invalid_argument("split_cover: dminus + dplus exceeds M(k)-2");
    const std::vector<SetMask> palette =
        middle_layer(k, static_cast<std::size_t>(std::max(0, dminus + dplus + 2)));
    const auto plus_side = split_sides(d, dminus, dplus, "split_cover");

    // V- takes palette slots [0, dminus], V+ slots [dminus+1, dminus+dplus+1]
    std::vector<int> color(d.vertex_count(), -1);
    std::vector<char> used(dminus + dplus + 2, 0);
    for (int v : order) {
        if (plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int u : d.in_neighbors(v))
            if (!plus_side[u] && color[u] >= 0) used[color[u]] = 1;
        int slot = -1;
        for (int i = 0; i <= dminus; ++i)
            if (!used[i]) {
                slot = i;
                break;
            }
        color[v] = slot;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (!plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int w : d.out_neighbors(v))
            if (plus_side[w] && color[w] >= 0) used[color[w]] = 1;
        int slot = -1;
        for (int i = dminus + 1; i <= dminus + dplus + 1; ++i)
            if (!used[i]) {
                slot = i;
                break;
            }
        color[v] = slot;
    }
    CutCover c{k, std::vector<SetMask>(d.vertex_count())};
    for (int v = 0; v < d.vertex_count(); ++v) c.sets[v] = palette[color[v]];
    return c;
}

CutCover cover_class_21(const Digraph& d) {
    const auto order = topo_or_throw(d, "cover_class_21");
    const auto plus_side = split_sides(d, 2, 1, "cover_class_21");
    const std::vector<SetMask> two_sets = subsets_of_size(3, 2);  // {1,2},{1,3},{2,3}
    const SetMask full = full_set(3);

    std::vector<SetMask> sets(d.vertex_count(), 0);
    std::vector<char> used(two_sets.size(), 0);
    for (int v : order) {
        if (plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int u : d.in_neighbors(v))
            if (!plus_side[u])
                for (std::size_t i = 0; i < two_sets.size(); ++i)
                    if (two_sets[i] == sets[u]) used[i] = 1;
        sets[v] = two_sets[first_free(two_sets, used)];
    }
    // reverse topological order, so the single out-neighbor is already set
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (!plus_side[v]) continue;
        auto out = d.out_neighbors(v);
        if (out.empty()) {
            sets[v] = 0b001;
        } else {
            int w = out.front();
            if (plus_side[w]) {
                for (int a = 1; a <= 3; ++a)
                    if ((SetMask{1} << (a - 1)) != sets[w]) {
                        sets[v] = SetMask{1} << (a - 1);
                        break;
                    }
            } else {
                sets[v] = full & ~sets[w];
            }
        }
    }
    return {3, std::move(sets)};
}

CutCover cover_class_52(const Digraph& d) {
    const auto order = topo_or_throw(d, "cover_class_52");
    const auto plus_side = split_sides(d, 5, 2, "cover_class_52");
    const std::vector<SetMask> two_sets = subsets_of_size(4, 2);
    const SetMask full = full_set(4);
    const int n = d.vertex_count();

    std::vector<SetMask> sets(n, 0);
    std::vector<SetMask> temp(n, 0);  // temporary colors of V+ vertices, 0 = none
    std::vector<char> colored(n, 0);
    std::vector<char> used(two_sets.size(), 0);
    for (int v : order) {
        if (plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int u : d.in_neighbors(v)) {
            SetMask forbidden = plus_side[u] ? temp[u] : (colored[u] ? sets[u] : 0);
            if (forbidden)
                for (std::size_t i = 0; i < two_sets.size(); ++i)
                    if (two_sets[i] == forbidden) used[i] = 1;
        }
        sets[v] = two_sets[first_free(two_sets, used)];
        colored[v] = 1;
        // a V+ in-neighbor whose first V- out-neighbor this is gets the
        // complement as its temporary color
        for (int u : d.in_neighbors(v))
            if (plus_side[u] && temp[u] == 0) {
                int minus_outs = 0;
                for (int w : d.out_neighbors(u)) minus_outs += !plus_side[w];
                if (minus_outs == 2) temp[u] = full & ~sets[v];
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (!plus_side[v]) continue;
        SetMask taken = 0;
        for (int w : d.out_neighbors(v)) taken |= sets[w];
        SetMask avail = full & ~taken;
        if (avail == 0) throw std::logic_error("cover_class_52: no free singleton");
        sets[v] = avail & (~avail + 1);  // lowest free color
        colored[v] = 1;
    }
    return {4, std::move(sets)};
}

CutCover cover_class_33(const Digraph& d) {
    const auto order = topo_or_throw(d, "cover_class_33");
    const auto plus_side = split_sides(d, 3, 3, "cover_class_33");
    const std::vector<SetMask> minus_palette = {0b1001, 0b1010, 0b1100, 0b0111};  // {1,4},{2,4},{3,4},{1,2,3}
    const std::vector<SetMask> plus_palette = {0b0011, 0b0110, 0b0101, 0b1000};   // {1,2},{2,3},{1,3},{4}

    std::vector<SetMask> sets(d.vertex_count(), 0);
    std::vector<char> colored(d.vertex_count(), 0);
    std::vector<char> used(4, 0);
    for (int v : order) {
        if (plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int u : d.in_neighbors(v))
            if (!plus_side[u] && colored[u])
                for (int i = 0; i < 4; ++i)
                    if (minus_palette[i] == sets[u]) used[i] = 1;
        // the last palette entry {1,2,3} only when the three 2-sets are taken,
        // which needs 3 in-neighbors inside V-
        sets[v] = minus_palette[first_free(minus_palette, used)];
        colored[v] = 1;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (!plus_side[v]) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int w : d.out_neighbors(v))
            if (plus_side[w] && colored[w])
                for (int i = 0; i < 4; ++i)
                    if (plus_palette[i] == sets[w]) used[i] = 1;
        sets[v] = plus_palette[first_free(plus_palette, used)];
        colored[v] = 1;
    }
    return {4, std::move(sets)};
}

}  // namespace cutcover
