#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutcover/cover.hpp"
#include "cutcover/digraph.hpp"

namespace cutcover {

// node-count / wall-clock pair; 0 means unlimited
struct SolveBudget {
    std::uint64_t max_nodes = 0;
    std::uint64_t max_ms = 0;
};

struct budget_exceeded_error : std::runtime_error {
    budget_exceeded_error() : std::runtime_error("search budget exceeded") {}
};

// Restrictions on the characteristic sets a solve may use. Per-vertex
// restrictions are applied before search; subset pairs are propagated as
// binary constraints alongside the arc constraints.
struct SolveConstraints {
    std::map<int, std::vector<SetMask>> allowed;         // explicit allowed families
    std::map<int, std::pair<int, int>> size_bounds;      // |C(v)| within [lo, hi]
    std::vector<std::pair<int, int>> subset_pairs;       // C(x) subseteq C(y)
    std::vector<std::pair<int, int>> forbidden_colors;   // (v, a): a not in C(v)

    void pin(int v, SetMask s) { allowed[v] = {s}; }
    void allow(int v, std::vector<SetMask> family) { allowed[v] = std::move(family); }
    void require_size(int v, int lo, int hi) { size_bounds[v] = {lo, hi}; }
    void forbid_color(int v, int a) { forbidden_colors.push_back({v, a}); }

    bool empty() const {
        return allowed.empty() && size_bounds.empty() && subset_pairs.empty() &&
               forbidden_colors.empty();
    }
    // pins and excluded colors break color-permutation symmetry; size and
    // subset constraints are permutation-invariant
    bool mentions_colors() const { return !allowed.empty() || !forbidden_colors.empty(); }
};

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t ms = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<CutCover> cover;  // present iff Sat; passes verify_cover and constraints
    SolveStats stats;
};

struct SolveOptions {
    SolveBudget budget;
    bool symmetry_breaking = true;  // auto-disabled when constraints mention colors
    bool memoize = true;
    int jobs = 1;  // >1 splits the first branching level across workers
};

// Complete backtracking search over characteristic-set assignments with
// arc-consistency propagation. Deterministic for fixed options.
SolveOutcome solve(const Digraph& d, int k, const SolveConstraints& constraints = {},
                   const SolveOptions& options = {});

struct MinKResult {
    enum class Status { Found, AboveMax, BudgetExceeded } status = Status::AboveMax;
    int k = -1;
    std::optional<CutCover> cover;
};

// Smallest k with a k-cut cover (linear scan; coverability is monotone in k).
MinKResult min_k(const Digraph& d, int k_max, const SolveBudget& budget = {});

struct OneCutResult {
    bool coverable = false;
    std::vector<int> cut;  // witnessing U (all tails) when coverable
};

// A is one cut iff no vertex has both an in-arc and an out-arc.
OneCutResult decide_one_cut(const Digraph& d);

struct TwoCutResult {
    bool coverable = false;
    std::optional<CutCover> cover;
    std::vector<int> odd_cycle;  // odd cycle in W when not coverable
};

// 2-cut cover exists iff the underlying graph induced by the vertices of
// non-zero indegree and outdegree is bipartite.
TwoCutResult decide_two_cuts(const Digraph& d);

}  // namespace cutcover
