#include "cutcover/path_power_hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcover {

long long delta_of_walk(const Digraph& d, const Walk& w, int power) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    if (w.vertices.empty()) throw std::invalid_argument("walk must contain a vertex");
    if (w.forward.size() + 1 != w.vertices.size())
        throw std::invalid_argument("walk step count does not match vertex count");
    long long delta = 0;
    for (int i = 0; i < w.steps(); ++i) {
        int a = w.vertices[i], b = w.vertices[i + 1];
        if (w.forward[i]) {
            if (!d.has_arc(a, b))
                throw std::invalid_argument("invalid forward step " + std::to_string(a) + "->" +
                                            std::to_string(b));
            delta += 1;
        } else {
            if (!d.has_arc(b, a))
                throw std::invalid_argument("invalid backward step " + std::to_string(a) + "<-" +
                                            std::to_string(b));
            delta -= power;
        }
    }
    return delta;
}

namespace {

struct Pred {
    int from = -1;
    bool forward = true;
};

// trace predecessor steps back from v; stops at a pred-less vertex or
// after max_steps steps
Walk trace_walk(const std::vector<Pred>& pred, int v, int max_steps) {
    std::vector<int> rev{v};
    std::vector<bool> rev_fwd;
    int cur = v;
    for (int s = 0; s < max_steps && pred[cur].from >= 0; ++s) {
        rev_fwd.push_back(pred[cur].forward);
        cur = pred[cur].from;
        rev.push_back(cur);
    }
    Walk w;
    w.vertices.assign(rev.rbegin(), rev.rend());
    w.forward.assign(rev_fwd.rbegin(), rev_fwd.rend());
    return w;
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> bfs{s};
        comp[s] = id;
        while (!bfs.empty()) {
            int v = bfs.back();
            bfs.pop_back();
            out[id].push_back(v);
            for (int w : d.out_neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    bfs.push_back(w);
                }
            for (int w : d.in_neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    bfs.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

}  // namespace

HomResult hom_to_path_power(const Digraph& d, int n, int power) {
    if (n < 1 || power < 1) throw std::invalid_argument("need n >= 1 and d >= 1");

    // an opposite pair gives a closed walk of two forward steps, Delta = 2
    if (!d.is_antisymmetric()) {
        for (const Arc& a : d.arcs())
            if (a.tail < a.head && d.has_arc(a.head, a.tail)) {
                HomResult res;
                res.kind = HomResult::Kind::Unbounded;
                res.witness.vertices = {a.tail, a.head, a.tail};
                res.witness.forward = {true, true};
                return res;
            }
    }

    const int nv = d.vertex_count();
    std::vector<long long> label(nv, 0), next(nv, 0);
    std::vector<Pred> pred(nv);
    const long long sentinel = static_cast<long long>(n) - 1 + static_cast<long long>(power) * nv;

    for (const auto& comp : weak_components(d)) {
        const int rounds = static_cast<int>(comp.size()) + 1;
        bool stabilized = false;
        int improved = -1;
        for (int m = 2; m <= rounds; ++m) {
            bool changed = false;
            for (int v : comp) {
                long long best = label[v];
                Pred best_pred = pred[v];
                for (int u : d.in_neighbors(v))
                    if (label[u] + 1 > best) {
                        best = label[u] + 1;
                        best_pred = {u, true};
                    }
                for (int w : d.out_neighbors(v))
                    if (label[w] - power > best) {
                        best = label[w] - power;
                        best_pred = {w, false};
                    }
                if (best > sentinel) best = sentinel + 1;
                next[v] = best;
                if (best > label[v]) {
                    pred[v] = best_pred;
                    changed = true;
                    improved = v;
                }
            }
            for (int v : comp) label[v] = next[v];
            if (!changed) {
                stabilized = true;
                break;
            }
        }
        bool overflow = false;
        for (int v : comp) overflow = overflow || label[v] > sentinel;
        if (!stabilized || overflow) {
            // walk the predecessor chain; the first repeated vertex closes a
            // positive-Delta segment
            HomResult res;
            res.kind = HomResult::Kind::Unbounded;
            Walk back = trace_walk(pred, improved, nv + 1);
            // back runs start..improved; find the last repeated vertex pair
            std::vector<int> seen(nv, -1);
            int lo = -1, hi = -1;
            for (int i = 0; i < static_cast<int>(back.vertices.size()); ++i) {
                int v = back.vertices[i];
                if (seen[v] >= 0) {
                    lo = seen[v];
                    hi = i;
                    break;
                }
                seen[v] = i;
            }
            if (lo < 0) throw std::logic_error("unbounded iteration without a repeated vertex");
            res.witness.vertices.assign(back.vertices.begin() + lo, back.vertices.begin() + hi + 1);
            res.witness.forward.assign(back.forward.begin() + lo, back.forward.begin() + hi);
            if (delta_of_walk(d, res.witness, power) <= 0)
                throw std::logic_error("extracted closed walk is not positive");
            return res;
        }
    }

    long long maxlab = 0;
    int argmax = -1;
    for (int v = 0; v < nv; ++v)
        if (label[v] > maxlab || argmax < 0) {
            maxlab = label[v];
            argmax = v;
        }
    if (nv > 0 && maxlab >= n) {
        HomResult res;
        res.kind = HomResult::Kind::TooLong;
        res.witness = trace_walk(pred, argmax, nv);
        return res;
    }

    HomResult res;
    res.kind = HomResult::Kind::Labeling;
    res.labels.assign(label.begin(), label.end());
    return res;
}

HomCheck verify_hom(const Digraph& d, int n, int power, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != d.vertex_count())
        throw std::invalid_argument("label count does not match vertex count");
    for (int v = 0; v < d.vertex_count(); ++v)
        if (labels[v] < 0 || labels[v] >= n) return {false, v, -1};
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        int diff = labels[a.head] - labels[a.tail];
        if (diff < 1 || diff > power) return {false, -1, i};
    }
    return {true, -1, -1};
}

}  // namespace cutcover
