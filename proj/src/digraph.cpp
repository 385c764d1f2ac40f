#include "cutcover/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cutcover {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    for (size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(a.tail) +
                                        " " + std::to_string(a.head));
        if (a.tail == a.head)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a.tail));
        if (i > 0 && arcs_[i - 1] == a)
            throw std::invalid_argument("duplicate arc: " + std::to_string(a.tail) + " " +
                                        std::to_string(a.head));
    }

    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_off_[a.tail + 1];
        ++in_off_[a.head + 1];
    }
    for (int v = 0; v < n_; ++v) {
        out_off_[v + 1] += out_off_[v];
        in_off_[v + 1] += in_off_[v];
    }
    out_adj_.resize(arcs_.size());
    in_adj_.resize(arcs_.size());
    std::vector<int> opos(out_off_.begin(), out_off_.end() - 1);
    std::vector<int> ipos(in_off_.begin(), in_off_.end() - 1);
    for (const Arc& a : arcs_) {
        out_adj_[opos[a.tail]++] = a.head;
        in_adj_[ipos[a.head]++] = a.tail;
    }
    // arcs_ is sorted, so out lists are already ascending; in lists need a sort
    for (int v = 0; v < n_; ++v)
        std::sort(in_adj_.begin() + in_off_[v], in_adj_.begin() + in_off_[v + 1]);

    antisymmetric_ = true;
    for (const Arc& a : arcs_) {
        if (a.tail < a.head && arc_index(a.head, a.tail) >= 0) {
            antisymmetric_ = false;
            break;
        }
    }
}

std::span<const int> Digraph::out_neighbors(int v) const {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
}

std::span<const int> Digraph::in_neighbors(int v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
}

int Digraph::arc_index(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
    if (it == arcs_.end() || !(*it == Arc{u, v})) return -1;
    return static_cast<int>(it - arcs_.begin());
}

Digraph Digraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
    return Digraph(n_, std::move(rev));
}

TopoOrder is_acyclic(const Digraph& d) {
    TopoOrder res;
    const int n = d.vertex_count();
    std::vector<int> indeg(n);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v) {
        indeg[v] = d.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    res.order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        res.order.push_back(v);
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(res.order.size()) == n) {
        res.acyclic = true;
        return res;
    }

    // extract a directed cycle among the vertices with remaining indegree
    res.acyclic = false;
    res.order.clear();
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<int> parent(n, -1);
    for (int s = 0; s < n && res.cycle.empty(); ++s) {
        if (indeg[s] == 0 || state[s] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty() && res.cycle.empty()) {
            auto& [v, idx] = stack.back();
            auto nbrs = d.out_neighbors(v);
            bool advanced = false;
            while (idx < nbrs.size()) {
                int w = nbrs[idx++];
                if (indeg[w] == 0) continue;  // not part of any cycle
                if (state[w] == 1) {
                    // back edge v -> w closes a cycle
                    res.cycle.push_back(w);
                    for (int x = v; x != w; x = parent[x]) res.cycle.push_back(x);
                    std::reverse(res.cycle.begin(), res.cycle.end());
                    break;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = v;
                    stack.push_back({w, 0});
                    advanced = true;
                    break;
                }
            }
            if (!res.cycle.empty()) break;
            if (!advanced && idx >= nbrs.size()) {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return res;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Digraph read_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string kw;
            if (!(ls >> kw >> n) || kw != "vertices" || n < 0)
                parse_fail(lineno, "expected header 'vertices N'");
            std::string rest;
            if (ls >> rest) parse_fail(lineno, "trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "malformed arc line: '" + line + "'");
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing tokens after arc");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lineno, "vertex index out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) parse_fail(lineno, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(Arc{u, v}).second)
            parse_fail(lineno, "duplicate arc: " + std::to_string(u) + " " + std::to_string(v));
        arcs.push_back({u, v});
    }
    if (n < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": missing 'vertices N' header");
    return Digraph(n, std::move(arcs));
}

std::string write_digraph(const Digraph& d) {
    std::string out = "vertices " + std::to_string(d.vertex_count()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

std::string write_dot(const Digraph& d, const std::string& name) {
    std::string out = "digraph " + name + " {\n";
    for (const Arc& a : d.arcs())
        out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace cutcover
