#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutcover/digraph.hpp"
#include "cutcover/generators.hpp"
#include "cutcover/solver.hpp"
#include "cutcover/symmetric.hpp"

namespace cutcover {

// Text format: "graph N" header, then one edge "u v" per line with u < v.
UGraph read_graph(const std::string& text);
std::string write_graph(const UGraph& g);

struct CutoffResult {
    Digraph digraph;
    int x = -1, y = -1, y_prime = -1;
    std::vector<int> path;  // the longest path used (lexicographically smallest)
};

// Cut off xy from y: take the last three vertices x, y, z of a longest
// path, add a fresh vertex y' and replace the arc xy by xy'. Requires an
// acyclic input with a directed path on three vertices.
CutoffResult cutoff(const Digraph& d);

// A color-forcing gadget: in every k-cut cover |C(x)| = 1 and
// C(x) <= C(y), and each singleton {a} is attainable with C(x) = C(y) = {a}.
struct Gadget {
    Digraph digraph;
    int x = -1, y = -1, y_prime = -1;
    int k = 0;
    bool validated = false;
    Digraph origin;                  // the uncovered digraph the iteration started from
    std::vector<int> origin_labels;  // homomorphism from digraph to origin
    int cutoff_steps = 0;
};

// Iterate cutoff from an uncovered digraph until the result is covered,
// then validate the two forcing properties by refutation solves.
Gadget find_gadget(const Digraph& d, int k, const SolveBudget& budget = {});

struct GadgetValidation {
    bool ok = false;
    std::string failed_check;  // which refutation sub-check failed
};

// Re-runs the property (1)/(2) checks from scratch; validation is idempotent.
GadgetValidation validate_gadget(const Gadget& g, const SolveBudget& budget = {});

// One gadget copy per vertex of G plus an arc x_u -> y_v per edge {u,v},
// u < v. Covered by k cuts iff G is k-colorable.
Digraph reduce_coloring_to_cutcover(const UGraph& g, const Gadget& gadget);

// checks that labels map every arc of d onto an arc of target
bool check_homomorphism(const Digraph& d, const Digraph& target, const std::vector<int>& labels);

struct ForcingProfile {
    std::vector<int> designated;
    int k = 0;
    std::vector<SolveStatus> exists_pinned;  // per color a: all of X pinned to {a}
    // no cover with all |C(x)| >= 1 escapes a common singleton
    bool forced_equal_singleton = false;
    // same with the stronger hypothesis |C(x)| = 1 on all of X
    bool forced_equal_given_singletons = false;
};

ForcingProfile forcing_profile(const Digraph& d, const std::vector<int>& designated, int k,
                               const SolveBudget& budget = {});

// A building block for the degree-bounded planar assembly: a digraph with
// two (edge piece) or three (node piece) attachment vertices whose
// characteristic sets are forced to a common singleton.
struct AttachGadget {
    Digraph digraph;
    std::vector<int> attach;
    int k = 3;
    std::vector<int> labels;  // homomorphism witness labels, when known
    bool validated = false;
};

// Candidate pieces built from the label constraints (arcs step down by
// 1..3); both are validated by the solver, not assumed.
AttachGadget make_equality_gadget();
AttachGadget make_junction_gadget();

// edge piece: every pinning SAT and forced-equal under nonempty sets
bool validate_edge_gadget(AttachGadget& g, const SolveBudget& budget = {});
// node piece: every pinning SAT and forced-equal under singleton sets
bool validate_node_gadget(AttachGadget& g, const SolveBudget& budget = {});

// Tree of degree-3 junction pieces joined by edge pieces, one dangling
// attachment per tree leaf; each dangling attachment (the set W_v, label 1
// in the metadata) gains an arc to a fresh sink (label 2).
GeneratedInstance assemble_vertex_gadget(const AttachGadget& edge_piece,
                                         const AttachGadget& node_piece, int degree);

struct GadgetSearchParams {
    std::vector<int> vertex_labels;  // label multiset; attachment = label attach_label
    int attach_label = 3;
    int max_step = 3;  // arcs go from label j to label i with j - i in 1..max_step
    int k = 3;
    int samples = 1000;
    std::uint64_t seed = 1;
};

// Randomized hunt for small edge-piece candidates consistent with the
// label constraints; every hit is solver-validated.
std::vector<AttachGadget> search_edge_gadgets(const GadgetSearchParams& params,
                                              const SolveBudget& budget = {});

std::string gadget_to_json(const Gadget& g);
Gadget gadget_from_json(const Digraph& d, const std::string& text);

}  // namespace cutcover
