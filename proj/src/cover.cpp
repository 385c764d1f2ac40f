#include "cutcover/cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace cutcover {

namespace {

void check_sizes(const Digraph& d, const CutCover& c) {
    if (c.k < 0 || c.k > 30) throw std::invalid_argument("cover k out of range (0..30)");
    if (static_cast<int>(c.sets.size()) != d.vertex_count())
        throw std::invalid_argument("cover size does not match vertex count");
    const SetMask full = full_set(c.k);
    for (SetMask s : c.sets)
        if ((s & ~full) != 0) throw std::invalid_argument("characteristic set exceeds ground set");
}

}  // namespace

CertificateCheck verify_cover(const Digraph& d, const CutCover& c) {
    check_sizes(d, c);
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        if (is_subset(c.sets[a.tail], c.sets[a.head])) return {false, i};
    }
    return {true, -1};
}

CertificateCheck verify_arc_coloring(const Digraph& d, const ArcColoring& col) {
    if (col.k < 0 || col.k > 30) throw std::invalid_argument("coloring k out of range (0..30)");
    if (static_cast<int>(col.colors.size()) != d.arc_count())
        throw std::invalid_argument("coloring size does not match arc count");
    for (int c : col.colors)
        if (c < 1 || c > col.k) throw std::invalid_argument("arc color out of range");
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        for (int w : d.out_neighbors(a.head)) {
            int j = d.arc_index(a.head, w);
            if (col.colors[i] == col.colors[j]) return {false, std::min(i, j)};
        }
    }
    return {true, -1};
}

CertificateCheck verify_cut_family(const Digraph& d, const CutFamily& f) {
    if (f.k < 0 || f.k > 30) throw std::invalid_argument("family k out of range (0..30)");
    if (static_cast<int>(f.cuts.size()) != f.k)
        throw std::invalid_argument("cut family must contain exactly k cuts");
    std::vector<std::vector<char>> member(f.k, std::vector<char>(d.vertex_count(), 0));
    for (int a = 0; a < f.k; ++a)
        for (int v : f.cuts[a]) {
            if (v < 0 || v >= d.vertex_count()) throw std::invalid_argument("cut vertex out of range");
            member[a][v] = 1;
        }
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& arc = d.arc(i);
        bool covered = false;
        for (int a = 0; a < f.k && !covered; ++a)
            covered = member[a][arc.tail] && !member[a][arc.head];
        if (!covered) return {false, i};
    }
    return {true, -1};
}

namespace {

void require_valid_cover(const Digraph& d, const CutCover& c) {
    auto check = verify_cover(d, c);
    if (!check.valid)
        throw std::invalid_argument("invalid cover: arc " + std::to_string(check.violating_arc) +
                                    " is not covered");
}

}  // namespace

CutFamily cover_to_cuts(const Digraph& d, const CutCover& c) {
    require_valid_cover(d, c);
    CutFamily f{c.k, std::vector<std::vector<int>>(c.k)};
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int a = 1; a <= c.k; ++a)
            if (set_contains(c.sets[v], a)) f.cuts[a - 1].push_back(v);
    return f;
}

CutCover cuts_to_cover(const Digraph& d, const CutFamily& f) {
    auto check = verify_cut_family(d, f);
    if (!check.valid)
        throw std::invalid_argument("invalid cut family: arc " + std::to_string(check.violating_arc) +
                                    " is not covered");
    CutCover c{f.k, std::vector<SetMask>(d.vertex_count(), 0)};
    for (int a = 1; a <= f.k; ++a)
        for (int v : f.cuts[a - 1]) c.sets[v] |= SetMask{1} << (a - 1);
    return c;
}

CutCover arc_coloring_to_cover(const Digraph& d, const ArcColoring& col) {
    auto check = verify_arc_coloring(d, col);
    if (!check.valid)
        throw std::invalid_argument("invalid arc coloring: consecutive arcs at arc " +
                                    std::to_string(check.violating_arc));
    // U_a = tails of color-a arcs
    CutFamily f{col.k, std::vector<std::vector<int>>(col.k)};
    std::vector<std::vector<char>> member(col.k, std::vector<char>(d.vertex_count(), 0));
    for (int i = 0; i < d.arc_count(); ++i) {
        int a = col.colors[i];
        int t = d.arc(i).tail;
        if (!member[a - 1][t]) {
            member[a - 1][t] = 1;
            f.cuts[a - 1].push_back(t);
        }
    }
    for (auto& cut : f.cuts) std::sort(cut.begin(), cut.end());
    return cuts_to_cover(d, f);
}

ArcColoring cover_to_arc_coloring(const Digraph& d, const CutCover& c) {
    require_valid_cover(d, c);
    ArcColoring col{c.k, std::vector<int>(d.arc_count(), 0)};
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        SetMask diff = c.sets[a.tail] & ~c.sets[a.head];
        col.colors[i] = std::countr_zero(diff) + 1;  // smallest eligible color
    }
    return col;
}

namespace {

using nlohmann::json;

std::vector<SetMask> sets_from_json(const json& arr, int k) {
    std::vector<SetMask> sets;
    for (const auto& lst : arr) {
        SetMask m = 0;
        for (int a : lst) {
            if (a < 1 || a > k) throw std::invalid_argument("set element out of range");
            m |= SetMask{1} << (a - 1);
        }
        sets.push_back(m);
    }
    return sets;
}

}  // namespace

std::string cover_to_json(const CutCover& c) {
    json j;
    j["k"] = c.k;
    j["sets"] = json::array();
    for (SetMask s : c.sets) j["sets"].push_back(set_elements(s));
    return j.dump();
}

CutCover cover_from_json(const std::string& text) {
    json j = json::parse(text);
    CutCover c;
    c.k = j.at("k").get<int>();
    if (c.k < 0 || c.k > 30) throw std::invalid_argument("cover k out of range (0..30)");
    c.sets = sets_from_json(j.at("sets"), c.k);
    return c;
}

std::string arc_coloring_to_json(const ArcColoring& c) {
    json j;
    j["k"] = c.k;
    j["colors"] = c.colors;
    return j.dump();
}

ArcColoring arc_coloring_from_json(const std::string& text) {
    json j = json::parse(text);
    return {j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
}

std::string cut_family_to_json(const CutFamily& f) {
    json j;
    j["k"] = f.k;
    j["cuts"] = f.cuts;
    return j.dump();
}

CutFamily cut_family_from_json(const std::string& text) {
    json j = json::parse(text);
    return {j.at("k").get<int>(), j.at("cuts").get<std::vector<std::vector<int>>>()};
}

}  // namespace cutcover
