#include "cutcover/generators.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "json.hpp"

namespace cutcover {

GeneratedInstance gen_path_power(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= std::min(n - 1, i + d); ++j) arcs.push_back({i, j});
    GeneratedInstance g{Digraph(n, std::move(arcs)), "path-power", {{"n", n}, {"d", d}}, {}};
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) g.labels[i] = i;
    return g;
}

GeneratedInstance gen_transitive_tournament(int n) {
    GeneratedInstance g = gen_path_power(n, n - 1);
    g.tag = "tt";
    g.params = {{"n", n}};
    return g;
}

namespace {

int block_size(int k) {
    if (k < 2) throw std::invalid_argument("block path needs k >= 2");
    if (k > 30) throw std::invalid_argument("block path k too large");
    return 1 << (k - 2);
}

}  // namespace

GeneratedInstance gen_block_path(int k, int l) {
    const int b = block_size(k);
    if (l < 1) throw std::invalid_argument("block path needs l >= 1");
    const long long nv = static_cast<long long>(l) * b;
    if (nv > 50'000'000) throw std::invalid_argument("block path too large");
    std::vector<Arc> arcs;
    auto id = [b](int r, int i) { return (r - 1) * b + (i - 1); };  // r, i are 1-based
    for (int r = 1; r <= l; ++r)
        for (int i = 1; i <= b; ++i) {
            for (int j = i + 1; j <= b; ++j) arcs.push_back({id(r, i), id(r, j)});
            if (r < l)
                for (int j = 1; j <= b; ++j) arcs.push_back({id(r, i), id(r + 1, j)});
        }
    GeneratedInstance g{Digraph(static_cast<int>(nv), std::move(arcs)),
                        "block-path",
                        {{"k", k}, {"l", l}, {"block", b}},
                        {}};
    g.labels.resize(nv);
    for (int r = 1; r <= l; ++r)
        for (int i = 1; i <= b; ++i) g.labels[id(r, i)] = r;
    return g;
}

GeneratedInstance gen_block_path_prime(int k, int l) {
    if (l < 2) throw std::invalid_argument("primed block path needs l >= 2");
    GeneratedInstance base = gen_block_path(k, l);
    const int b = block_size(k);
    const int n = base.digraph.vertex_count();
    const int v = n;  // the pinch vertex
    std::vector<Arc> arcs = base.digraph.arcs();
    auto id = [b](int r, int i) { return (r - 1) * b + (i - 1); };
    const int r0 = l / 2;
    for (int i = 1; i <= b; ++i) {
        arcs.push_back({id(r0, i), v});
        arcs.push_back({v, id(r0 + 1, i)});
    }
    GeneratedInstance g{Digraph(n + 1, std::move(arcs)),
                        "block-path-prime",
                        {{"k", k}, {"l", l}, {"block", b}},
                        base.labels};
    g.labels.push_back(0);
    return g;
}

CutCover block_path_cover(int k, int l) {
    const int b = block_size(k);
    if (l < 1) throw std::invalid_argument("block path needs l >= 1");
    // two families of sets: odd blocks use sets containing 2 but not 1,
    // even blocks sets containing 1 but not 2; a block lists its family by
    // decreasing set size, so no earlier set is contained in a later one
    auto family = [&](int anchor) {
        std::vector<SetMask> sets;
        const int rest = k - 2;
        for (int m = 0; m < (1 << rest); ++m)
            sets.push_back((static_cast<SetMask>(m) << 2) | (SetMask{1} << (anchor - 1)));
        std::stable_sort(sets.begin(), sets.end(),
                         [](SetMask a, SetMask b2) { return set_size(a) > set_size(b2); });
        return sets;
    };
    const std::vector<SetMask> odd = family(2), even = family(1);
    CutCover c{k, {}};
    c.sets.reserve(static_cast<std::size_t>(l) * b);
    for (int r = 1; r <= l; ++r) {
        const auto& fam = (r % 2 == 1) ? odd : even;
        c.sets.insert(c.sets.end(), fam.begin(), fam.end());
    }
    return c;
}

long long layered_indegree_size(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("need d >= 1 and k >= 1");
    if (k > 30) throw std::invalid_argument("layered construction k too large");
    const long long top = 1LL << k;
    if (d > top) throw std::invalid_argument("layered construction needs d <= 2^k");
    long long total = d + 1;
    long long layer = 1;
    for (long long i = d + 1; i <= top; ++i) {
        if (layer > LLONG_MAX / d) return LLONG_MAX;
        layer *= d;
        if (total > LLONG_MAX - layer) return LLONG_MAX;
        total += layer;
    }
    return total;
}

GeneratedInstance gen_layered_indegree(int d, int k, long long size_limit) {
    const long long predicted = layered_indegree_size(d, k);
    if (predicted > size_limit)
        throw std::invalid_argument("layered construction would have " + std::to_string(predicted) +
                                    " vertices, over the limit of " + std::to_string(size_limit));
    const int top = 1 << k;
    std::vector<std::vector<int>> in_nbrs;  // per vertex, ascending
    std::vector<int> layer_of;
    std::vector<int> prev_layer;

    for (int i = 0; i <= std::min(d, top); ++i) {
        std::vector<int> nbrs(prev_layer);
        in_nbrs.push_back(std::move(nbrs));
        layer_of.push_back(i);
        prev_layer.push_back(static_cast<int>(in_nbrs.size()) - 1);
    }
    // prev_layer currently holds v_0..v_d; the active layer is {v_d}
    std::vector<int> active{static_cast<int>(in_nbrs.size()) - 1};
    for (int i = d + 1; i <= top; ++i) {
        std::vector<int> next;
        for (int v : active) {
            for (int u : in_nbrs[v]) {
                std::vector<int> nbrs;
                nbrs.reserve(d);
                nbrs.push_back(v);
                for (int x : in_nbrs[v])
                    if (x != u) nbrs.push_back(x);
                std::sort(nbrs.begin(), nbrs.end());
                in_nbrs.push_back(std::move(nbrs));
                layer_of.push_back(i);
                next.push_back(static_cast<int>(in_nbrs.size()) - 1);
            }
        }
        active = std::move(next);
    }

    std::vector<Arc> arcs;
    for (int v = 0; v < static_cast<int>(in_nbrs.size()); ++v)
        for (int u : in_nbrs[v]) arcs.push_back({u, v});
    const int n = static_cast<int>(in_nbrs.size());
    GeneratedInstance g{Digraph(n, std::move(arcs)),
                        "layered-indegree",
                        {{"d", d}, {"k", k}, {"layers", top + 1}},
                        std::move(layer_of)};
    return g;
}

GeneratedInstance join(const Digraph& lower, const Digraph& upper) {
    if (!is_acyclic(lower).acyclic || !is_acyclic(upper).acyclic)
        throw std::invalid_argument("join requires acyclic inputs");
    const int nl = lower.vertex_count(), nu = upper.vertex_count();
    std::vector<Arc> arcs = lower.arcs();
    for (const Arc& a : upper.arcs()) arcs.push_back({a.tail + nl, a.head + nl});
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nu; ++v) arcs.push_back({u, nl + v});
    GeneratedInstance g{Digraph(nl + nu, std::move(arcs)),
                        "join",
                        {{"lower", nl}, {"upper", nu}},
                        {}};
    g.labels.assign(nl, 0);
    g.labels.resize(nl + nu, 1);
    return g;
}

std::string instance_meta_json(const GeneratedInstance& g) {
    nlohmann::json j;
    j["tag"] = g.tag;
    for (const auto& [key, value] : g.params) j["params"][key] = value;
    j["labels"] = g.labels;
    return j.dump();
}

}  // namespace cutcover
