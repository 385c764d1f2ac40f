#pragma once

#include <string>
#include <vector>

#include "cutcover/digraph.hpp"
#include "cutcover/subsets.hpp"

namespace cutcover {

// The three equivalent certificates for "A is covered by k cuts":
// characteristic sets per vertex, a consecutive-distinct arc coloring,
// and k explicit cuts U_1..U_k.

struct CutCover {
    int k = 0;
    std::vector<SetMask> sets;  // one per vertex
};

struct ArcColoring {
    int k = 0;
    std::vector<int> colors;  // one per arc in canonical order, values 1..k
};

struct CutFamily {
    int k = 0;
    std::vector<std::vector<int>> cuts;  // k ascending vertex lists U_1..U_k
};

struct CertificateCheck {
    bool valid = false;
    int violating_arc = -1;  // first violating arc in canonical order, -1 if valid
};

// Valid iff C(u) is not a subset of C(v) for every arc uv.
CertificateCheck verify_cover(const Digraph& d, const CutCover& c);
// Valid iff no two consecutive arcs uv, vw share a color.
CertificateCheck verify_arc_coloring(const Digraph& d, const ArcColoring& col);
// Valid iff every arc lies in at least one of the k cuts.
CertificateCheck verify_cut_family(const Digraph& d, const CutFamily& f);

// Conversions between the formulations. Each takes a valid input
// certificate (throws std::invalid_argument otherwise) and produces a
// certificate that passes the target verifier.
CutFamily cover_to_cuts(const Digraph& d, const CutCover& c);
ArcColoring cover_to_arc_coloring(const Digraph& d, const CutCover& c);
CutCover arc_coloring_to_cover(const Digraph& d, const ArcColoring& col);
CutCover cuts_to_cover(const Digraph& d, const CutFamily& f);

// JSON forms: {"k":..,"sets":[[..],..]}, {"k":..,"colors":[..]},
// {"k":..,"cuts":[[..],..]}.
std::string cover_to_json(const CutCover& c);
CutCover cover_from_json(const std::string& text);
std::string arc_coloring_to_json(const ArcColoring& c);
ArcColoring arc_coloring_from_json(const std::string& text);
std::string cut_family_to_json(const CutFamily& f);
CutFamily cut_family_from_json(const std::string& text);

}  // namespace cutcover
