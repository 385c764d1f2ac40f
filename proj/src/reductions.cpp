#include "cutcover/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cutcover {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

UGraph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string kw;
            if (!(ls >> kw >> n) || kw != "graph" || n < 0)
                parse_fail(lineno, "expected header 'graph N'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "malformed edge line: '" + line + "'");
        if (u < 0 || v >= n || u >= v)
            parse_fail(lineno, "edge must satisfy 0 <= u < v < N: " + std::to_string(u) + " " +
                                   std::to_string(v));
        if (!seen.insert({u, v}).second)
            parse_fail(lineno, "duplicate edge: " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({u, v});
    }
    if (n < 0) throw std::runtime_error("missing 'graph N' header");
    std::sort(edges.begin(), edges.end());
    return {n, std::move(edges)};
}

std::string write_graph(const UGraph& g) {
    std::string out = "graph " + std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

CutoffResult cutoff(const Digraph& d) {
    TopoOrder topo = is_acyclic(d);
    if (!topo.acyclic) throw std::invalid_argument("cutoff: input digraph is cyclic");
    const int n = d.vertex_count();
    // longest path starting at each vertex, then walk the lexicographically
    // smallest maximum-length path
    std::vector<int> len_from(n, 1);
    for (auto it = topo.order.rbegin(); it != topo.order.rend(); ++it)
        for (int w : d.out_neighbors(*it)) len_from[*it] = std::max(len_from[*it], len_from[w] + 1);
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, len_from[v]);
    if (best < 3) throw std::invalid_argument("cutoff: no directed path on three vertices");
    int cur = -1;
    for (int v = 0; v < n; ++v)
        if (len_from[v] == best) {
            cur = v;
            break;
        }
    std::vector<int> path{cur};
    while (static_cast<int>(path.size()) < best) {
        for (int w : d.out_neighbors(cur))
            if (len_from[w] == len_from[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }

    const int x = path[path.size() - 3];
    const int y = path[path.size() - 2];
    for (int w : d.out_neighbors(y))
        if (d.out_degree(w) != 0)
            throw std::logic_error("cutoff: an out-neighbor of y extends the longest path");

    const int y_prime = n;
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs())
        if (!(a.tail == x && a.head == y)) arcs.push_back(a);
    arcs.push_back({x, y_prime});
    return {Digraph(n + 1, std::move(arcs)), x, y, y_prime, std::move(path)};
}

namespace {

// spreads one budget over a sequence of dependent solves
class BudgetTracker {
public:
    explicit BudgetTracker(const SolveBudget& total) : total_(total), start_(Clock::now()) {}

    SolveBudget remaining() const {
        SolveBudget r;
        if (total_.max_nodes) {
            if (used_nodes_ >= total_.max_nodes) throw budget_exceeded_error{};
            r.max_nodes = total_.max_nodes - used_nodes_;
        }
        if (total_.max_ms) {
            auto elapsed = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_)
                    .count());
            if (elapsed >= total_.max_ms) throw budget_exceeded_error{};
            r.max_ms = total_.max_ms - elapsed;
        }
        return r;
    }

    SolveOutcome run(const Digraph& d, int k, const SolveConstraints& cons) {
        SolveOptions opt;
        opt.budget = remaining();
        SolveOutcome out = solve(d, k, cons, opt);
        used_nodes_ += out.stats.nodes;
        if (out.status == SolveStatus::BudgetExceeded) throw budget_exceeded_error{};
        return out;
    }

private:
    SolveBudget total_;
    std::uint64_t used_nodes_ = 0;
    Clock::time_point start_;
};

GadgetValidation validate_with(BudgetTracker& tracker, const Gadget& g) {
    // property (1): |C(x)| = 1 in every cover, via two refutations
    SolveConstraints empty_x;
    empty_x.require_size(g.x, 0, 0);
    if (tracker.run(g.digraph, g.k, empty_x).status != SolveStatus::Unsat)
        return {false, "property1: a cover admits C(x) empty"};
    if (g.k >= 2) {
        SolveConstraints large_x;
        large_x.require_size(g.x, 2, g.k);
        if (tracker.run(g.digraph, g.k, large_x).status != SolveStatus::Unsat)
            return {false, "property1: a cover admits |C(x)| >= 2"};
    }
    // property (1): C(x) <= C(y), refuted per color
    for (int a = 1; a <= g.k; ++a) {
        SolveConstraints cons;
        cons.pin(g.x, SetMask{1} << (a - 1));
        cons.forbid_color(g.y, a);
        if (tracker.run(g.digraph, g.k, cons).status != SolveStatus::Unsat)
            return {false, "property1: C(x)={" + std::to_string(a) + "} without " +
                               std::to_string(a) + " in C(y)"};
    }
    // property (2): each singleton attained on both x and y
    for (int a = 1; a <= g.k; ++a) {
        SolveConstraints cons;
        cons.pin(g.x, SetMask{1} << (a - 1));
        cons.pin(g.y, SetMask{1} << (a - 1));
        if (tracker.run(g.digraph, g.k, cons).status != SolveStatus::Sat)
            return {false, "property2: no cover with C(x)=C(y)={" + std::to_string(a) + "}"};
    }
    return {true, ""};
}

}  // namespace

GadgetValidation validate_gadget(const Gadget& g, const SolveBudget& budget) {
    BudgetTracker tracker(budget);
    return validate_with(tracker, g);
}

Gadget find_gadget(const Digraph& d, int k, const SolveBudget& budget) {
    BudgetTracker tracker(budget);
    if (tracker.run(d, k, {}).status != SolveStatus::Unsat)
        throw std::invalid_argument("find_gadget: the input digraph is covered by k cuts");

    Digraph cur = d;
    std::vector<int> labels(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) labels[v] = v;
    int steps = 0;
    while (true) {
        CutoffResult co = cutoff(cur);
        ++steps;
        std::vector<int> next_labels = labels;
        next_labels.push_back(labels[co.y]);
        if (tracker.run(co.digraph, k, {}).status == SolveStatus::Sat) {
            Gadget g;
            g.digraph = co.digraph;
            g.x = co.x;
            g.y = co.y;
            g.y_prime = co.y_prime;
            g.k = k;
            g.origin = d;
            g.origin_labels = next_labels;
            g.cutoff_steps = steps;
            GadgetValidation val = validate_with(tracker, g);
            if (val.ok) {
                g.validated = true;
                return g;
            }
        }
        cur = std::move(co.digraph);
        labels = std::move(next_labels);
    }
}

Digraph reduce_coloring_to_cutcover(const UGraph& g, const Gadget& gadget) {
    if (!gadget.validated) throw std::invalid_argument("reduce: gadget is not validated");
    const int ng = gadget.digraph.vertex_count();
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(g.n) * gadget.digraph.arc_count() + g.edges.size());
    for (int v = 0; v < g.n; ++v)
        for (const Arc& a : gadget.digraph.arcs())
            arcs.push_back({v * ng + a.tail, v * ng + a.head});
    for (auto [u, v] : g.edges) arcs.push_back({u * ng + gadget.x, v * ng + gadget.y});
    return Digraph(g.n * ng, std::move(arcs));
}

bool check_homomorphism(const Digraph& d, const Digraph& target, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != d.vertex_count()) return false;
    for (int l : labels)
        if (l < 0 || l >= target.vertex_count()) return false;
    for (const Arc& a : d.arcs())
        if (!target.has_arc(labels[a.tail], labels[a.head])) return false;
    return true;
}

ForcingProfile forcing_profile(const Digraph& d, const std::vector<int>& designated, int k,
                               const SolveBudget& budget) {
    if (designated.empty()) throw std::invalid_argument("forcing_profile: empty designated set");
    for (int v : designated)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("forcing_profile: designated vertex out of range");
    BudgetTracker tracker(budget);
    ForcingProfile p;
    p.designated = designated;
    p.k = k;

    for (int a = 1; a <= k; ++a) {
        SolveConstraints cons;
        for (int v : designated) cons.pin(v, SetMask{1} << (a - 1));
        p.exists_pinned.push_back(tracker.run(d, k, cons).status);
    }

    // refutation cases for "all nonempty, yet not all one common singleton":
    // some designated set has two elements ...
    p.forced_equal_singleton = true;
    for (int v : designated) {
        SolveConstraints cons;
        for (int w : designated) cons.require_size(w, 1, k);
        cons.require_size(v, 2, k);
        if (k >= 2 && tracker.run(d, k, cons).status == SolveStatus::Sat) {
            p.forced_equal_singleton = false;
            break;
        }
    }
    // ... or all are singletons and one differs from the first
    const std::vector<SetMask> singletons = subsets_of_size(k, 1);
    auto differing_case_sat = [&](bool all_singletons) {
        for (std::size_t i = 1; i < designated.size(); ++i)
            for (int a = 1; a <= k; ++a) {
                SolveConstraints cons;
                if (all_singletons)
                    for (int w : designated) cons.require_size(w, 1, 1);
                else
                    for (int w : designated) cons.require_size(w, 1, k);
                cons.pin(designated[0], SetMask{1} << (a - 1));
                std::vector<SetMask> others;
                for (SetMask s : singletons)
                    if (s != (SetMask{1} << (a - 1))) others.push_back(s);
                cons.allow(designated[i], others);
                if (tracker.run(d, k, cons).status == SolveStatus::Sat) return true;
            }
        return false;
    };
    if (p.forced_equal_singleton && k >= 2 && differing_case_sat(false))
        p.forced_equal_singleton = false;
    p.forced_equal_given_singletons = k < 2 || !differing_case_sat(true);
    return p;
}

namespace {

// incremental construction of glued piece unions
struct Builder {
    std::vector<Arc> arcs;
    std::vector<int> labels;
    int n = 0;

    int add_vertex(int label) {
        labels.push_back(label);
        return n++;
    }

    // inserts a copy of piece; preplaced maps piece vertices to existing ids
    std::vector<int> add_piece(const Digraph& piece, const std::vector<int>& piece_labels,
                               const std::map<int, int>& preplaced) {
        std::vector<int> where(piece.vertex_count());
        for (int v = 0; v < piece.vertex_count(); ++v) {
            auto it = preplaced.find(v);
            where[v] = it != preplaced.end()
                           ? it->second
                           : add_vertex(piece_labels.empty() ? -1 : piece_labels[v]);
        }
        for (const Arc& a : piece.arcs()) arcs.push_back({where[a.tail], where[a.head]});
        return where;
    }
};

}  // namespace

AttachGadget make_equality_gadget() {
    // two terminals with label 3, one vertex per label 4..11, and every arc
    // allowed by the labels (steps of 1..3 downward); the symbolic cover
    // {a},{b},{c},{b,c},{a},{a,b},{a,c},{b,c},{a,b,c} on labels 3..11 makes
    // each terminal singleton attainable
    AttachGadget g;
    g.labels = {3, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    std::vector<Arc> arcs;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            int diff = g.labels[i] - g.labels[j];
            if (diff >= 1 && diff <= 3) arcs.push_back({i, j});
        }
    g.digraph = Digraph(10, std::move(arcs));
    g.attach = {0, 1};
    g.k = 3;
    return g;
}

AttachGadget make_junction_gadget() {
    // two equality gadgets chained at a shared terminal; each of the three
    // terminals gets an internal out-arc to a fresh sink so gluing cannot
    // leave them empty
    AttachGadget eq = make_equality_gadget();
    Builder b;
    auto first = b.add_piece(eq.digraph, eq.labels, {});
    auto second = b.add_piece(eq.digraph, eq.labels, {{0, first[1]}});
    std::vector<int> attach{first[0], first[1], second[1]};
    AttachGadget g;
    g.k = 3;
    for (int t : attach) {
        int sink = b.add_vertex(0);
        b.arcs.push_back({t, sink});
    }
    g.digraph = Digraph(b.n, std::move(b.arcs));
    g.labels = std::move(b.labels);
    g.attach = std::move(attach);
    return g;
}

namespace {

bool pinned_all_sat(const ForcingProfile& p) {
    for (SolveStatus s : p.exists_pinned)
        if (s != SolveStatus::Sat) return false;
    return true;
}

}  // namespace

bool validate_edge_gadget(AttachGadget& g, const SolveBudget& budget) {
    if (g.attach.size() != 2) throw std::invalid_argument("edge gadget needs 2 attachments");
    ForcingProfile p = forcing_profile(g.digraph, g.attach, g.k, budget);
    g.validated = pinned_all_sat(p) && p.forced_equal_singleton;
    return g.validated;
}

bool validate_node_gadget(AttachGadget& g, const SolveBudget& budget) {
    if (g.attach.size() != 3) throw std::invalid_argument("node gadget needs 3 attachments");
    ForcingProfile p = forcing_profile(g.digraph, g.attach, g.k, budget);
    g.validated = pinned_all_sat(p) && p.forced_equal_given_singletons;
    return g.validated;
}

GeneratedInstance assemble_vertex_gadget(const AttachGadget& edge_piece,
                                         const AttachGadget& node_piece, int degree) {
    if (degree < 3) throw std::invalid_argument("assemble: degree must be at least 3");
    if (!edge_piece.validated || edge_piece.attach.size() != 2)
        throw std::invalid_argument("assemble: edge piece not validated");
    if (!node_piece.validated || node_piece.attach.size() != 3)
        throw std::invalid_argument("assemble: node piece not validated");
    if (edge_piece.k != node_piece.k) throw std::invalid_argument("assemble: mismatched k");

    // caterpillar tree: degree-2 internal vertices in a path, two leaves on
    // each end internal vertex, one on each middle one
    const int internals = degree - 2;
    std::vector<std::pair<int, int>> tree_edges;  // (internal, internal), marker -1 for a leaf
    for (int i = 0; i + 1 < internals; ++i) tree_edges.push_back({i, i + 1});
    std::vector<std::pair<int, int>> leaf_edges;  // (internal, leaf ordinal)
    int leaf = 0;
    for (int i = 0; i < internals; ++i) {
        int want = internals == 1 ? 3 : (i == 0 || i == internals - 1 ? 2 : 1);
        for (int j = 0; j < want; ++j) leaf_edges.push_back({i, leaf++});
    }

    Builder b;
    std::vector<std::array<int, 3>> slots(internals);  // attach ids per node piece
    std::vector<int> next_slot(internals, 0);
    for (int i = 0; i < internals; ++i) {
        auto where = b.add_piece(node_piece.digraph, node_piece.labels, {});
        for (int s = 0; s < 3; ++s) slots[i][s] = where[node_piece.attach[s]];
    }
    auto take_slot = [&](int i) { return slots[i][next_slot[i]++]; };

    for (auto [i, j] : tree_edges)
        b.add_piece(edge_piece.digraph, edge_piece.labels,
                    {{edge_piece.attach[0], take_slot(i)}, {edge_piece.attach[1], take_slot(j)}});
    std::vector<int> dangling;
    for (auto [i, ordinal] : leaf_edges) {
        (void)ordinal;
        auto where = b.add_piece(edge_piece.digraph, edge_piece.labels,
                                 {{edge_piece.attach[0], take_slot(i)}});
        dangling.push_back(where[edge_piece.attach[1]]);
    }
    std::vector<int> roles(b.n, 0);
    for (int w : dangling) roles[w] = 1;
    for (int w : dangling) {
        int sink = b.add_vertex(0);
        roles.push_back(2);
        b.arcs.push_back({w, sink});
    }

    GeneratedInstance out;
    out.digraph = Digraph(b.n, std::move(b.arcs));
    out.tag = "vertex-gadget";
    out.params = {{"degree", degree},
                  {"k", edge_piece.k},
                  {"edge_pieces", static_cast<long long>(tree_edges.size() + leaf_edges.size())},
                  {"node_pieces", internals}};
    out.labels = std::move(roles);
    return out;
}

std::vector<AttachGadget> search_edge_gadgets(const GadgetSearchParams& params,
                                              const SolveBudget& budget) {
    const int n = static_cast<int>(params.vertex_labels.size());
    std::vector<int> attach;
    for (int v = 0; v < n; ++v)
        if (params.vertex_labels[v] == params.attach_label) attach.push_back(v);
    if (attach.size() != 2)
        throw std::invalid_argument("search_edge_gadgets: need exactly two attachment labels");

    std::vector<Arc> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int diff = params.vertex_labels[i] - params.vertex_labels[j];
            if (diff >= 1 && diff <= params.max_step) candidates.push_back({i, j});
        }

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> keep_prob(0.55, 0.98);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<AttachGadget> found;
    for (int s = 0; s < params.samples; ++s) {
        const double p = keep_prob(rng);
        std::vector<Arc> arcs;
        for (const Arc& a : candidates)
            if (coin(rng) < p) arcs.push_back(a);
        AttachGadget g;
        g.digraph = Digraph(n, std::move(arcs));
        g.attach = attach;
        g.k = params.k;
        g.labels = params.vertex_labels;
        try {
            if (validate_edge_gadget(g, budget)) found.push_back(g);
        } catch (const budget_exceeded_error&) {
            // a stalled candidate is just skipped
        }
    }
    return found;
}

std::string gadget_to_json(const Gadget& g) {
    nlohmann::json j;
    j["x"] = g.x;
    j["y"] = g.y;
    j["y_prime"] = g.y_prime;
    j["k"] = g.k;
    j["validated"] = g.validated;
    j["cutoff_steps"] = g.cutoff_steps;
    j["origin_labels"] = g.origin_labels;
    return j.dump();
}

Gadget gadget_from_json(const Digraph& d, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Gadget g;
    g.digraph = d;
    g.x = j.at("x").get<int>();
    g.y = j.at("y").get<int>();
    g.y_prime = j.value("y_prime", -1);
    g.k = j.at("k").get<int>();
    g.validated = j.at("validated").get<bool>();
    g.cutoff_steps = j.value("cutoff_steps", 0);
    if (j.contains("origin_labels")) g.origin_labels = j["origin_labels"].get<std::vector<int>>();
    return g;
}

}  // namespace cutcover
