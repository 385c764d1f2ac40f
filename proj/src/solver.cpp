#include "cutcover/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstring>
#include <thread>

namespace cutcover {

namespace {

using Clock = std::chrono::steady_clock;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaskTableMaxK = 12;
constexpr std::size_t kMemoMaxEntries = std::size_t{1} << 24;
constexpr std::size_t kMemoFrontierBits = 112;  // key layout: depth in the top bits

enum class Status { Sat, Unsat, Budget, Cancelled };

// Directed revision edges of the binary constraints. Arc (u,v) demands
// C(u), a non-subset of C(v); a subset pair (x,y) demands C(x) <= C(y).
//   kind 0: revise head of arc from tail      kind 1: revise tail from head
//   kind 2: revise y of pair from x           kind 3: revise x of pair from y
struct ReviseEdge {
    int source = 0;
    int target = 0;
    std::uint8_t kind = 0;
};

struct Problem {
    const Digraph* d = nullptr;
    int n = 0, k = 0, nvals = 1, W = 1;
    SolveConstraints constraints;
    SolveBudget budget;
    Clock::time_point deadline;
    bool has_deadline = false;

    bool use_tables = false;
    std::vector<u64> subs, sups;  // row per value: subsets / supersets bitsets

    std::vector<ReviseEdge> edges;  // laid out in sibling pairs (e ^ 1)
    std::vector<int> src_off, src_ids;

    std::vector<int> order, pos;
    std::vector<u64> init_dom;  // after unary constraints and symmetry breaking

    bool memo_enabled = false;
    std::vector<char> memo_eligible;
    std::vector<std::vector<int>> frontier;

    const u64* table_row(bool subs_table, int val) const {
        const auto& t = subs_table ? subs : sups;
        return t.data() + static_cast<std::size_t>(val) * W;
    }
};

void build_tables(Problem& p) {
    if (p.k > kMaskTableMaxK) return;
    p.use_tables = true;
    const std::size_t rows = static_cast<std::size_t>(p.nvals) * p.W;
    p.subs.assign(rows, 0);
    p.sups.assign(rows, 0);
    const int full = p.nvals - 1;
    for (int t = 0; t < p.nvals; ++t) {
        u64* row = p.subs.data() + static_cast<std::size_t>(t) * p.W;
        int s = t;
        while (true) {
            row[s >> 6] |= u64{1} << (s & 63);
            if (s == 0) break;
            s = (s - 1) & t;
        }
    }
    for (int s = 0; s < p.nvals; ++s) {
        u64* row = p.sups.data() + static_cast<std::size_t>(s) * p.W;
        int t = s;
        while (true) {
            row[t >> 6] |= u64{1} << (t & 63);
            if (t == full) break;
            t = (t + 1) | s;
        }
    }
}

void build_order(Problem& p) {
    const Digraph& d = *p.d;
    TopoOrder topo = is_acyclic(d);
    if (topo.acyclic) {
        p.order = topo.order;
    } else {
        p.order.resize(p.n);
        for (int v = 0; v < p.n; ++v) p.order[v] = v;
        std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) {
            int da = d.in_degree(a) + d.out_degree(a);
            int db = d.in_degree(b) + d.out_degree(b);
            if (da != db) return da > db;
            return a < b;
        });
    }
    p.pos.assign(p.n, 0);
    for (int i = 0; i < p.n; ++i) p.pos[p.order[i]] = i;
}

void build_edges(Problem& p) {
    const Digraph& d = *p.d;
    p.edges.reserve(2 * (d.arc_count() + p.constraints.subset_pairs.size()));
    for (const Arc& a : d.arcs()) {
        p.edges.push_back({a.tail, a.head, 0});
        p.edges.push_back({a.head, a.tail, 1});
    }
    for (auto [x, y] : p.constraints.subset_pairs) {
        p.edges.push_back({x, y, 2});
        p.edges.push_back({y, x, 3});
    }
    p.src_off.assign(p.n + 1, 0);
    for (const ReviseEdge& e : p.edges) ++p.src_off[e.source + 1];
    for (int v = 0; v < p.n; ++v) p.src_off[v + 1] += p.src_off[v];
    p.src_ids.resize(p.edges.size());
    std::vector<int> fill(p.src_off.begin(), p.src_off.end() - 1);
    for (int e = 0; e < static_cast<int>(p.edges.size()); ++e)
        p.src_ids[fill[p.edges[e].source]++] = e;
}

void apply_unary(Problem& p, bool symmetry) {
    const SetMask full = full_set(p.k);
    p.init_dom.assign(static_cast<std::size_t>(p.n) * p.W, 0);
    for (int v = 0; v < p.n; ++v) {
        u64* row = p.init_dom.data() + static_cast<std::size_t>(v) * p.W;
        for (int val = 0; val < p.nvals; ++val) row[val >> 6] |= u64{1} << (val & 63);
    }
    auto check_vertex = [&](int v) {
        if (v < 0 || v >= p.n) throw std::invalid_argument("constraint vertex out of range");
    };
    auto row_of = [&](int v) { return p.init_dom.data() + static_cast<std::size_t>(v) * p.W; };
    for (const auto& [v, fam] : p.constraints.allowed) {
        check_vertex(v);
        std::vector<u64> keep(p.W, 0);
        for (SetMask s : fam) {
            if ((s & ~full) != 0) throw std::invalid_argument("allowed set exceeds ground set");
            keep[s >> 6] |= u64{1} << (s & 63);
        }
        u64* row = row_of(v);
        for (int w = 0; w < p.W; ++w) row[w] &= keep[w];
    }
    for (const auto& [v, bounds] : p.constraints.size_bounds) {
        check_vertex(v);
        u64* row = row_of(v);
        for (int val = 0; val < p.nvals; ++val)
            if (std::popcount(static_cast<unsigned>(val)) < bounds.first ||
                std::popcount(static_cast<unsigned>(val)) > bounds.second)
                row[val >> 6] &= ~(u64{1} << (val & 63));
    }
    for (auto [v, a] : p.constraints.forbidden_colors) {
        check_vertex(v);
        if (a < 1 || a > p.k) throw std::invalid_argument("forbidden color out of range");
        u64* row = row_of(v);
        for (int val = 0; val < p.nvals; ++val)
            if (val & (1 << (a - 1))) row[val >> 6] &= ~(u64{1} << (val & 63));
    }
    for (auto [x, y] : p.constraints.subset_pairs) {
        check_vertex(x);
        check_vertex(y);
    }
    if (symmetry && p.n > 0) {
        // any cover can be color-permuted so the first branching vertex
        // carries a prefix set {1,..,s}
        std::vector<u64> keep(p.W, 0);
        for (int s = 0; s <= p.k; ++s) {
            SetMask m = s == 0 ? 0 : full_set(s);
            keep[m >> 6] |= u64{1} << (m & 63);
        }
        u64* row = row_of(p.order[0]);
        for (int w = 0; w < p.W; ++w) row[w] &= keep[w];
    }
}

void build_memo_support(Problem& p, bool memoize) {
    p.memo_enabled = false;
    if (!memoize || p.n == 0 || p.n > 4096) return;
    std::vector<int> last_pos(p.n, -1);
    auto touch = [&](int a, int b) {
        last_pos[a] = std::max(last_pos[a], p.pos[b]);
        last_pos[b] = std::max(last_pos[b], p.pos[a]);
    };
    for (const Arc& a : p.d->arcs()) touch(a.tail, a.head);
    for (auto [x, y] : p.constraints.subset_pairs) touch(x, y);
    std::size_t total = 0;
    for (int v = 0; v < p.n; ++v)
        if (last_pos[v] > p.pos[v]) total += static_cast<std::size_t>(last_pos[v] - p.pos[v]);
    if (total > (std::size_t{1} << 22)) return;  // frontier lists would be too wide to pay off
    p.frontier.assign(p.n, {});
    for (int v = 0; v < p.n; ++v)
        for (int t = p.pos[v] + 1; t <= last_pos[v]; ++t) p.frontier[t].push_back(v);
    p.memo_eligible.assign(p.n, 0);
    for (int t = 1; t < p.n; ++t)
        p.memo_eligible[t] =
            static_cast<std::size_t>(p.frontier[t].size()) * std::max(p.k, 1) <= kMemoFrontierBits;
    p.memo_enabled = true;
}

// open-addressing set of nonzero 128-bit keys for proven-unsat subtrees
class MemoSet {
public:
    MemoSet() { slots_.assign(1 << 16, 0); }

    bool contains(u128 key) const {
        std::size_t i = index(key);
        while (slots_[i] != 0) {
            if (slots_[i] == key) return true;
            i = (i + 1) & (slots_.size() - 1);
        }
        return false;
    }

    void insert(u128 key) {
        if (count_ >= kMemoMaxEntries) return;
        if (2 * (count_ + 1) > slots_.size()) grow();
        std::size_t i = index(key);
        while (slots_[i] != 0) {
            if (slots_[i] == key) return;
            i = (i + 1) & (slots_.size() - 1);
        }
        slots_[i] = key;
        ++count_;
    }

private:
    static u64 hash(u128 key) {
        u64 x = static_cast<u64>(key) ^ (static_cast<u64>(key >> 64) * 0x9E3779B97F4A7C15ull);
        x ^= x >> 32;
        x *= 0xD6E8FEB86659FD93ull;
        x ^= x >> 29;
        return x;
    }
    std::size_t index(u128 key) const { return hash(key) & (slots_.size() - 1); }
    void grow() {
        std::vector<u128> old;
        old.swap(slots_);
        slots_.assign(old.size() * 2, 0);
        for (u128 key : old)
            if (key != 0) {
                std::size_t i = index(key);
                while (slots_[i] != 0) i = (i + 1) & (slots_.size() - 1);
                slots_[i] = key;
            }
    }

    std::vector<u128> slots_;
    std::size_t count_ = 0;
};

class Engine {
public:
    explicit Engine(const Problem& p) : p_(p), dom_(p.init_dom) {
        in_queue_.assign(p_.edges.size(), 0);
        saved_at_.assign(p_.n, -1);
        assigned_.assign(p_.n, 0);
        scratch_.resize(p_.n);
    }

    // abort once a branch with a smaller first-level value has reported SAT
    void set_abort_signal(const std::atomic<int>* first_sat, int my_index) {
        abort_signal_ = first_sat;
        abort_index_ = my_index;
    }

    u64 nodes() const { return nodes_; }
    const std::vector<SetMask>& solution() const { return assigned_; }

    bool initial_propagate() {
        for (int e = 0; e < static_cast<int>(p_.edges.size()); ++e) enqueue(e);
        return run_queue();
    }

    // pin before search; used by the parallel first-level split
    void pin_root(SetMask val) {
        u64* row = dom(p_.order[0]);
        std::memset(row, 0, sizeof(u64) * p_.W);
        row[val >> 6] = u64{1} << (val & 63);
    }

    Status search() {
        if (p_.n == 0) return Status::Sat;
        return dfs(0);
    }

    std::vector<SetMask> root_values() const {
        std::vector<SetMask> vals;
        const u64* row = cdom(p_.order[0]);
        for (int wi = 0; wi < p_.W; ++wi) {
            u64 bits = row[wi];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                vals.push_back(static_cast<SetMask>(wi * 64 + b));
            }
        }
        return vals;
    }

    Status search_from_root(SetMask val) {
        ++nodes_;
        pin_root(val);
        assigned_[p_.order[0]] = val;
        for (int e : src_edges(p_.order[0])) enqueue(e);
        if (!run_queue()) return Status::Unsat;
        if (p_.n == 1) return Status::Sat;
        return dfs(1);
    }

private:
    u64* dom(int v) { return dom_.data() + static_cast<std::size_t>(v) * p_.W; }
    const u64* cdom(int v) const { return dom_.data() + static_cast<std::size_t>(v) * p_.W; }

    std::span<const int> src_edges(int v) const {
        return {p_.src_ids.data() + p_.src_off[v], p_.src_ids.data() + p_.src_off[v + 1]};
    }

    void enqueue(int e) {
        if (!in_queue_[e]) {
            in_queue_[e] = 1;
            queue_.push_back(e);
        }
    }

    void save_dom(int v) {
        if (saved_at_[v] == cp_id_) return;
        saved_at_[v] = cp_id_;
        trail_vertex_.push_back(v);
        const u64* row = cdom(v);
        trail_words_.insert(trail_words_.end(), row, row + p_.W);
    }

    bool supported(std::uint8_t kind, const u64* ds, int val) const {
        if (p_.use_tables) {
            const u64* row = p_.table_row(kind == 0 || kind == 2, val);
            if (kind <= 1) {
                for (int w = 0; w < p_.W; ++w)
                    if (ds[w] & ~row[w]) return true;
            } else {
                for (int w = 0; w < p_.W; ++w)
                    if (ds[w] & row[w]) return true;
            }
            return false;
        }
        const SetMask a = static_cast<SetMask>(val);
        for (int w = 0; w < p_.W; ++w) {
            u64 bits = ds[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                const SetMask s = static_cast<SetMask>(w * 64 + b);
                switch (kind) {
                    case 0:
                        if ((s & ~a) != 0) return true;
                        break;
                    case 1:
                        if ((a & ~s) != 0) return true;
                        break;
                    case 2:
                        if ((s & ~a) == 0) return true;
                        break;
                    case 3:
                        if ((a & ~s) == 0) return true;
                        break;
                }
            }
        }
        return false;
    }

    // returns false when the target domain empties
    bool revise(int eid) {
        const ReviseEdge& e = p_.edges[eid];
        const u64* ds = cdom(e.source);
        u64* dt = dom(e.target);
        bool changed = false;
        bool nonempty = false;
        for (int wi = 0; wi < p_.W; ++wi) {
            u64 bits = dt[wi];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                if (!supported(e.kind, ds, wi * 64 + b)) {
                    if (!changed) {
                        save_dom(e.target);
                        dt = dom(e.target);
                        changed = true;
                    }
                    dt[wi] &= ~(u64{1} << b);
                } else {
                    nonempty = true;
                }
            }
        }
        if (!changed) return true;
        if (!nonempty) return false;
        for (int f : src_edges(e.target))
            if (f != (eid ^ 1)) enqueue(f);
        return true;
    }

    bool run_queue() {
        std::size_t head = 0;
        bool ok = true;
        while (head < queue_.size()) {
            int e = queue_[head++];
            in_queue_[e] = 0;
            if (!revise(e)) {
                ok = false;
                break;
            }
        }
        for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
        queue_.clear();
        return ok;
    }

    void push_checkpoint() {
        cp_marks_.push_back(trail_vertex_.size());
        ++cp_id_;
    }

    void pop_checkpoint() {
        std::size_t mark = cp_marks_.back();
        cp_marks_.pop_back();
        while (trail_vertex_.size() > mark) {
            int v = trail_vertex_.back();
            trail_vertex_.pop_back();
            u64* row = dom(v);
            std::copy(trail_words_.end() - p_.W, trail_words_.end(), row);
            trail_words_.resize(trail_words_.size() - p_.W);
            saved_at_[v] = -1;
        }
    }

    u128 memo_key(int t) const {
        u128 key = static_cast<u128>(t + 1);
        for (int v : p_.frontier[t]) key = (key << p_.k) | assigned_[v];
        return key;
    }

    Status budget_check() {
        if (p_.budget.max_nodes && nodes_ > p_.budget.max_nodes) return Status::Budget;
        if ((nodes_ & 1023) == 0) {
            if (p_.has_deadline && Clock::now() > p_.deadline) return Status::Budget;
            if (abort_signal_ && abort_signal_->load(std::memory_order_relaxed) < abort_index_)
                return Status::Cancelled;
        }
        return Status::Sat;  // means "fine"
    }

    Status dfs(int t) {
        if (t == p_.n) return Status::Sat;
        const bool memoable = p_.memo_enabled && p_.memo_eligible[t];
        if (memoable && memo_.contains(memo_key(t))) return Status::Unsat;
        const int v = p_.order[t];
        auto& vals = scratch_[t];
        vals.clear();
        {
            const u64* row = cdom(v);
            for (int wi = 0; wi < p_.W; ++wi) {
                u64 bits = row[wi];
                while (bits) {
                    int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    vals.push_back(static_cast<SetMask>(wi * 64 + b));
                }
            }
        }
        for (SetMask val : vals) {
            ++nodes_;
            if (Status s = budget_check(); s != Status::Sat) return s;
            push_checkpoint();
            save_dom(v);
            u64* row = dom(v);
            std::memset(row, 0, sizeof(u64) * p_.W);
            row[val >> 6] = u64{1} << (val & 63);
            assigned_[v] = val;
            for (int e : src_edges(v)) enqueue(e);
            Status r = run_queue() ? dfs(t + 1) : Status::Unsat;
            pop_checkpoint();
            if (r != Status::Unsat) return r;  // Sat propagates up; so do aborts
        }
        if (memoable) memo_.insert(memo_key(t));
        return Status::Unsat;
    }

    const Problem& p_;
    std::vector<u64> dom_;
    const std::atomic<int>* abort_signal_ = nullptr;
    int abort_index_ = 0;

    std::vector<int> queue_;
    std::vector<char> in_queue_;

    std::vector<int> trail_vertex_;
    std::vector<u64> trail_words_;
    std::vector<int> saved_at_;
    std::vector<std::size_t> cp_marks_;
    int cp_id_ = 0;

    std::vector<SetMask> assigned_;
    std::vector<std::vector<SetMask>> scratch_;

    MemoSet memo_;
    u64 nodes_ = 0;
};

bool satisfies_constraints(const CutCover& c, const SolveConstraints& cons) {
    for (const auto& [v, fam] : cons.allowed)
        if (std::find(fam.begin(), fam.end(), c.sets[v]) == fam.end()) return false;
    for (const auto& [v, b] : cons.size_bounds) {
        int s = set_size(c.sets[v]);
        if (s < b.first || s > b.second) return false;
    }
    for (auto [x, y] : cons.subset_pairs)
        if (!is_subset(c.sets[x], c.sets[y])) return false;
    for (auto [v, a] : cons.forbidden_colors)
        if (set_contains(c.sets[v], a)) return false;
    return true;
}

CutCover cover_from_solution(const Problem& p, const std::vector<SetMask>& vals) {
    CutCover c{p.k, vals};
    auto check = verify_cover(*p.d, c);
    if (!check.valid || !satisfies_constraints(c, p.constraints))
        throw std::logic_error("solver produced an invalid certificate");
    return c;
}

}  // namespace

SolveOutcome solve(const Digraph& d, int k, const SolveConstraints& constraints,
                   const SolveOptions& options) {
    if (k < 0 || k > 30) throw std::invalid_argument("k out of range (0..30)");
    const auto t0 = Clock::now();
    auto finish = [&](SolveOutcome out) {
        out.stats.ms = static_cast<u64>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
        return out;
    };

    Problem p;
    p.d = &d;
    p.n = d.vertex_count();
    p.k = k;
    p.nvals = 1 << k;
    p.W = (p.nvals + 63) / 64;
    p.constraints = constraints;
    p.budget = options.budget;
    if (options.budget.max_ms) {
        p.deadline = t0 + std::chrono::milliseconds(options.budget.max_ms);
        p.has_deadline = true;
    }

    // domain storage guard: 2^k values per vertex
    const std::size_t words = static_cast<std::size_t>(p.W) * (static_cast<std::size_t>(p.n) + 2 +
                              (k <= kMaskTableMaxK ? 2 * static_cast<std::size_t>(p.nvals) : 0));
    if (words > (std::size_t{1} << 28))
        return finish({SolveStatus::BudgetExceeded, std::nullopt, {}});

    build_order(p);
    build_edges(p);
    build_tables(p);
    const bool symmetry = options.symmetry_breaking && !constraints.mentions_colors();
    apply_unary(p, symmetry);
    build_memo_support(p, options.memoize);

    if (p.n == 0) return finish({SolveStatus::Sat, CutCover{k, {}}, {}});

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        Engine eng(p);
        if (!eng.initial_propagate())
            return finish({SolveStatus::Unsat, std::nullopt, {eng.nodes(), 0}});
        Status s = eng.search();
        SolveOutcome out;
        out.stats.nodes = eng.nodes();
        switch (s) {
            case Status::Sat:
                out.status = SolveStatus::Sat;
                out.cover = cover_from_solution(p, eng.solution());
                break;
            case Status::Unsat:
                out.status = SolveStatus::Unsat;
                break;
            default:
                out.status = SolveStatus::BudgetExceeded;
                break;
        }
        return finish(out);
    }

    // parallel mode: split the first branching level, keep the sequential
    // value order when combining so the certificate stays canonical
    Engine master(p);
    if (!master.initial_propagate())
        return finish({SolveStatus::Unsat, std::nullopt, {master.nodes(), 0}});
    const std::vector<SetMask> vals = master.root_values();
    if (vals.empty()) return finish({SolveStatus::Unsat, std::nullopt, {}});

    const int nworkers = static_cast<int>(std::min<std::size_t>(jobs, vals.size()));
    std::vector<Status> status(vals.size(), Status::Cancelled);
    std::vector<std::vector<SetMask>> sols(vals.size());
    std::vector<u64> node_counts(vals.size(), 0);
    std::atomic<int> first_sat{INT_MAX};
    auto worker = [&](int wid) {
        for (std::size_t i = wid; i < vals.size(); i += static_cast<std::size_t>(nworkers)) {
            if (static_cast<int>(i) > first_sat.load(std::memory_order_relaxed)) {
                status[i] = Status::Cancelled;
                continue;
            }
            Engine eng(p);
            eng.set_abort_signal(&first_sat, static_cast<int>(i));
            if (!eng.initial_propagate()) {
                status[i] = Status::Unsat;
                node_counts[i] = eng.nodes();
                continue;
            }
            Status s = eng.search_from_root(vals[i]);
            status[i] = s;
            node_counts[i] = eng.nodes();
            if (s == Status::Sat) {
                sols[i] = eng.solution();
                int expected = first_sat.load();
                while (static_cast<int>(i) < expected &&
                       !first_sat.compare_exchange_weak(expected, static_cast<int>(i))) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();

    SolveOutcome out;
    for (u64 c : node_counts) out.stats.nodes += c;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (status[i] == Status::Sat) {
            out.status = SolveStatus::Sat;
            out.cover = cover_from_solution(p, sols[i]);
            return finish(out);
        }
        if (status[i] == Status::Budget || status[i] == Status::Cancelled) {
            out.status = SolveStatus::BudgetExceeded;
            return finish(out);
        }
    }
    out.status = SolveStatus::Unsat;
    return finish(out);
}

MinKResult min_k(const Digraph& d, int k_max, const SolveBudget& budget) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    const auto t0 = Clock::now();
    u64 used_nodes = 0;
    for (int k = 0; k <= k_max; ++k) {
        SolveOptions opt;
        if (budget.max_nodes) {
            if (used_nodes >= budget.max_nodes) return {MinKResult::Status::BudgetExceeded, k, std::nullopt};
            opt.budget.max_nodes = budget.max_nodes - used_nodes;
        }
        if (budget.max_ms) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            if (static_cast<u64>(elapsed) >= budget.max_ms)
                return {MinKResult::Status::BudgetExceeded, k, std::nullopt};
            opt.budget.max_ms = budget.max_ms - static_cast<u64>(elapsed);
        }
        SolveOutcome out = solve(d, k, {}, opt);
        used_nodes += out.stats.nodes;
        if (out.status == SolveStatus::Sat) return {MinKResult::Status::Found, k, out.cover};
        if (out.status == SolveStatus::BudgetExceeded)
            return {MinKResult::Status::BudgetExceeded, k, std::nullopt};
    }
    return {MinKResult::Status::AboveMax, -1, std::nullopt};
}

OneCutResult decide_one_cut(const Digraph& d) {
    OneCutResult res;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.in_degree(v) > 0 && d.out_degree(v) > 0) return res;
    res.coverable = true;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) > 0) res.cut.push_back(v);
    return res;
}

TwoCutResult decide_two_cuts(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<char> in_w(n, 0);
    for (int v = 0; v < n; ++v) in_w[v] = d.in_degree(v) > 0 && d.out_degree(v) > 0;

    // underlying graph restricted to W
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : d.arcs())
        if (in_w[a.tail] && in_w[a.head]) {
            adj[a.tail].push_back(a.head);
            adj[a.head].push_back(a.tail);
        }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }

    std::vector<int> color(n, 0), parent(n, -1);  // colors 1/2
    TwoCutResult res;
    for (int root = 0; root < n; ++root) {
        if (!in_w[root] || color[root] != 0) continue;
        color[root] = 1;
        std::vector<int> bfs{root};
        for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
            int v = bfs[qi];
            for (int w : adj[v]) {
                if (color[w] == 0) {
                    color[w] = 3 - color[v];
                    parent[w] = v;
                    bfs.push_back(w);
                } else if (color[w] == color[v]) {
                    // odd cycle: climb to the common ancestor
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    std::reverse(pv.begin(), pv.end());
                    std::reverse(pw.begin(), pw.end());
                    std::size_t i = 0;
                    while (i + 1 < pv.size() && i + 1 < pw.size() && pv[i + 1] == pw[i + 1]) ++i;
                    res.odd_cycle.assign(pv.begin() + i, pv.end());
                    std::reverse(res.odd_cycle.begin(), res.odd_cycle.end());
                    res.odd_cycle.insert(res.odd_cycle.end(), pw.begin() + i + 1, pw.end());
                    return res;
                }
            }
        }
    }

    res.coverable = true;
    CutCover c{2, std::vector<SetMask>(n, 0)};
    for (int v = 0; v < n; ++v) {
        if (d.in_degree(v) == 0)
            c.sets[v] = 0b11;
        else if (in_w[v])
            c.sets[v] = color[v] == 1 ? 0b01 : 0b10;
        else
            c.sets[v] = 0;  // outdegree 0
    }
    res.cover = c;
    return res;
}

}  // namespace cutcover
