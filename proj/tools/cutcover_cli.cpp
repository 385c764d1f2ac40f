// command line front end: generation, solving, verification, homomorphism
// tests, reductions and bound tables over the digraph text format and JSON
// certificates
//
// exit codes: 0 = SAT / true / success, 1 = UNSAT / false, 2 = error,
// 3 = budget exceeded

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutcover/bounds.hpp"
#include "cutcover/constructive.hpp"
#include "cutcover/cover.hpp"
#include "cutcover/digraph.hpp"
#include "cutcover/generators.hpp"
#include "cutcover/path_power_hom.hpp"
#include "cutcover/reductions.hpp"
#include "cutcover/solver.hpp"
#include "cutcover/symmetric.hpp"

namespace {

using namespace cutcover;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

Digraph load_digraph(const std::string& path) { return read_digraph(slurp(path)); }

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        default: return "budget";
    }
}

std::string stats_json(const SolveOutcome& out) {
    nlohmann::json j;
    j["nodes"] = out.stats.nodes;
    j["ms"] = out.stats.ms;
    j["outcome"] = status_name(out.status);
    return j.dump();
}

SolveConstraints constraints_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SolveConstraints cons;
    if (j.contains("pin"))
        for (auto& [vertex, elems] : j["pin"].items())
            cons.pin(std::stoi(vertex), set_from_elements(elems.get<std::vector<int>>()));
    if (j.contains("allowed"))
        for (auto& [vertex, families] : j["allowed"].items()) {
            std::vector<SetMask> fam;
            for (auto& elems : families) fam.push_back(set_from_elements(elems.get<std::vector<int>>()));
            cons.allow(std::stoi(vertex), fam);
        }
    if (j.contains("sizes"))
        for (auto& [vertex, range] : j["sizes"].items())
            cons.require_size(std::stoi(vertex), range[0].get<int>(), range[1].get<int>());
    if (j.contains("forbid"))
        for (auto& item : j["forbid"]) cons.forbid_color(item[0].get<int>(), item[1].get<int>());
    if (j.contains("subset_pairs"))
        for (auto& item : j["subset_pairs"])
            cons.subset_pairs.push_back({item[0].get<int>(), item[1].get<int>()});
    return cons;
}

Walk walk_from_result(const HomResult& r) { return r.witness; }

nlohmann::json walk_json(const Walk& w) {
    nlohmann::json j;
    j["vertices"] = w.vertices;
    std::vector<int> fwd;
    for (bool b : w.forward) fwd.push_back(b ? 1 : 0);
    j["forward"] = fwd;
    return j;
}

struct CommonArgs {
    std::string digraph = "-";
    std::string out;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    int jobs = 1;
    bool stats = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-cut covers of digraphs: solve, construct, certify"};
    app.require_subcommand(1);

    CommonArgs args;
    int k = 3, n = 0, d = 1, l = 1, kmax = 6, degree = 3;
    long long size_limit = 1000000;
    std::string path2, cover_path, graph_path, gadget_json, meta_path, constraints_path,
        tag, vertices_csv, out_prefix = "gadget";
    bool as_json = false;
    std::uint64_t seed = 1;
    int samples = 200;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", args.budget_nodes, "node budget, 0 = unlimited");
        cmd->add_option("--budget-ms", args.budget_ms, "wall clock budget in ms, 0 = unlimited");
    };

    auto* verify_cmd = app.add_subcommand("verify", "check a cover certificate against a digraph");
    verify_cmd->add_option("--digraph", args.digraph, "digraph file or - for stdin");
    verify_cmd->add_option("--cover", cover_path, "cover JSON file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide k-cut coverability exactly");
    solve_cmd->add_option("-k", k, "number of cuts")->required();
    solve_cmd->add_option("--digraph", args.digraph);
    solve_cmd->add_option("--constraints", constraints_path, "pin/domain restrictions JSON");
    solve_cmd->add_option("--out", args.out, "write the cover JSON here");
    solve_cmd->add_option("--jobs", args.jobs, "parallel workers for the first branch level");
    solve_cmd->add_flag("--stats", args.stats, "print {nodes, ms, outcome} JSON on stderr");
    add_budget(solve_cmd);

    auto* decide_cmd = app.add_subcommand("decide", "fast deciders for k <= 2, exact otherwise");
    decide_cmd->add_option("-k", k)->required();
    decide_cmd->add_option("--digraph", args.digraph);
    add_budget(decide_cmd);

    auto* mink_cmd = app.add_subcommand("min-k", "smallest k admitting a cover");
    mink_cmd->add_option("--k-max", kmax)->required();
    mink_cmd->add_option("--digraph", args.digraph);
    add_budget(mink_cmd);

    auto* hom_cmd = app.add_subcommand("hom", "homomorphism to a directed path power");
    hom_cmd->add_option("-n", n, "path length")->required();
    hom_cmd->add_option("-d", d, "power")->required();
    hom_cmd->add_option("--digraph", args.digraph);

    auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance");
    gen_cmd->add_option("tag", tag, "path-power | tt | block-path | block-path-prime | layered | join | symmetrize")
        ->required();
    gen_cmd->add_option("-n", n);
    gen_cmd->add_option("-d", d);
    gen_cmd->add_option("-k", k);
    gen_cmd->add_option("-l", l);
    gen_cmd->add_option("--size-limit", size_limit);
    gen_cmd->add_option("--left", args.digraph, "left side for join");
    gen_cmd->add_option("--right", path2, "right side for join");
    gen_cmd->add_option("--graph", graph_path, "undirected graph for symmetrize");
    gen_cmd->add_option("--meta", meta_path, "write metadata sidecar JSON here");

    auto* reduce_cmd = app.add_subcommand("reduce", "k-colorability to k-cut-cover reduction");
    reduce_cmd->add_option("--graph", graph_path)->required();
    reduce_cmd->add_option("--gadget-digraph", args.digraph)->required();
    reduce_cmd->add_option("--gadget-json", gadget_json)->required();

    auto* gadget_cmd = app.add_subcommand("gadget", "find, validate, profile, assemble, search");
    gadget_cmd->require_subcommand(1);
    auto* gfind = gadget_cmd->add_subcommand("find", "iterate cut-offs until a validated gadget");
    gfind->add_option("-k", k)->required();
    gfind->add_option("--digraph", args.digraph);
    gfind->add_option("--out-prefix", out_prefix);
    add_budget(gfind);
    auto* gval = gadget_cmd->add_subcommand("validate", "re-run the forcing checks");
    gval->add_option("--gadget-digraph", args.digraph)->required();
    gval->add_option("--gadget-json", gadget_json)->required();
    add_budget(gval);
    auto* gprof = gadget_cmd->add_subcommand("profile", "forcing profile of designated vertices");
    gprof->add_option("-k", k)->required();
    gprof->add_option("--digraph", args.digraph);
    gprof->add_option("--vertices", vertices_csv, "comma separated designated vertices")->required();
    add_budget(gprof);
    auto* gasm = gadget_cmd->add_subcommand("assemble", "tree assembly of edge and node pieces");
    gasm->add_option("--degree", degree)->required();
    add_budget(gasm);
    auto* gsearch = gadget_cmd->add_subcommand("search", "randomized hunt for edge pieces");
    gsearch->add_option("--labels", vertices_csv, "comma separated vertex labels")->required();
    gsearch->add_option("--samples", samples);
    gsearch->add_option("--seed", seed);
    add_budget(gsearch);

    auto* norm_cmd = app.add_subcommand("normalize", "middle-layer normal form of a symmetric cover");
    norm_cmd->add_option("--digraph", args.digraph);
    norm_cmd->add_option("--cover", cover_path)->required();
    norm_cmd->add_option("--out", args.out);

    auto* bounds_cmd = app.add_subcommand("bounds", "exact bound tables");
    bounds_cmd->add_option("--k-max", kmax);
    bounds_cmd->add_option("--class", vertices_csv, "dminus,dplus for a class bound query");
    bounds_cmd->add_flag("--json", as_json);

    auto* selftest_cmd = app.add_subcommand("selftest", "randomized construction self checks");
    selftest_cmd->add_option("--seed", seed);
    selftest_cmd->add_option("--samples", samples);

    CLI11_PARSE(app, argc, argv);

    try {
        SolveBudget budget{args.budget_nodes, args.budget_ms};

        if (verify_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            CutCover cover = cover_from_json(slurp(cover_path));
            auto check = verify_cover(dg, cover);
            if (check.valid) {
                std::cout << "valid\n";
                return kExitTrue;
            }
            const Arc& a = dg.arc(check.violating_arc);
            std::cout << "invalid at arc " << a.tail << " " << a.head << "\n";
            return kExitFalse;
        }

        if (solve_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            SolveConstraints cons;
            if (!constraints_path.empty()) cons = constraints_from_json(slurp(constraints_path));
            SolveOptions opt;
            opt.budget = budget;
            opt.jobs = args.jobs;
            SolveOutcome out = solve(dg, k, cons, opt);
            if (args.stats) std::cerr << stats_json(out) << "\n";
            if (out.status == SolveStatus::Sat) {
                spill(args.out, cover_to_json(*out.cover) + "\n");
                return kExitTrue;
            }
            return out.status == SolveStatus::Unsat ? kExitFalse : kExitBudget;
        }

        if (decide_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            if (k == 1) {
                OneCutResult r = decide_one_cut(dg);
                if (r.coverable) {
                    nlohmann::json j;
                    j["cut"] = r.cut;
                    std::cout << j.dump() << "\n";
                }
                return r.coverable ? kExitTrue : kExitFalse;
            }
            if (k == 2) {
                TwoCutResult r = decide_two_cuts(dg);
                if (r.coverable)
                    std::cout << cover_to_json(*r.cover) << "\n";
                else {
                    nlohmann::json j;
                    j["odd_cycle"] = r.odd_cycle;
                    std::cout << j.dump() << "\n";
                }
                return r.coverable ? kExitTrue : kExitFalse;
            }
            SolveOptions opt;
            opt.budget = budget;
            SolveOutcome out = solve(dg, k, {}, opt);
            if (out.status == SolveStatus::Sat) {
                std::cout << cover_to_json(*out.cover) << "\n";
                return kExitTrue;
            }
            return out.status == SolveStatus::Unsat ? kExitFalse : kExitBudget;
        }

        if (mink_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            MinKResult r = min_k(dg, kmax, budget);
            switch (r.status) {
                case MinKResult::Status::Found:
                    std::cout << r.k << "\n";
                    return kExitTrue;
                case MinKResult::Status::AboveMax:
                    std::cout << "greater than " << kmax << "\n";
                    return kExitFalse;
                default:
                    return kExitBudget;
            }
        }

        if (hom_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            HomResult r = hom_to_path_power(dg, n, d);
            nlohmann::json j;
            switch (r.kind) {
                case HomResult::Kind::Labeling:
                    j["type"] = "labeling";
                    j["data"] = r.labels;
                    std::cout << j.dump() << "\n";
                    return kExitTrue;
                case HomResult::Kind::TooLong:
                    j["type"] = "too_long";
                    j["data"] = walk_json(walk_from_result(r));
                    std::cout << j.dump() << "\n";
                    return kExitFalse;
                default:
                    j["type"] = "unbounded";
                    j["data"] = walk_json(walk_from_result(r));
                    std::cout << j.dump() << "\n";
                    return kExitFalse;
            }
        }

        if (gen_cmd->parsed()) {
            GeneratedInstance g;
            if (tag == "path-power")
                g = gen_path_power(n, d);
            else if (tag == "tt")
                g = gen_transitive_tournament(n);
            else if (tag == "block-path")
                g = gen_block_path(k, l);
            else if (tag == "block-path-prime")
                g = gen_block_path_prime(k, l);
            else if (tag == "layered")
                g = gen_layered_indegree(d, k, size_limit);
            else if (tag == "join")
                g = join(load_digraph(args.digraph), load_digraph(path2));
            else if (tag == "symmetrize") {
                UGraph ug = read_graph(slurp(graph_path));
                g.digraph = symmetrize(ug);
                g.tag = "symmetrize";
                g.params = {{"n", ug.n}, {"edges", static_cast<long long>(ug.edges.size())}};
            } else
                throw std::runtime_error("unknown generator tag: " + tag);
            std::cout << write_digraph(g.digraph);
            if (!meta_path.empty()) spill(meta_path, instance_meta_json(g) + "\n");
            return kExitTrue;
        }

        if (reduce_cmd->parsed()) {
            UGraph ug = read_graph(slurp(graph_path));
            Gadget g = gadget_from_json(load_digraph(args.digraph), slurp(gadget_json));
            std::cout << write_digraph(reduce_coloring_to_cutcover(ug, g));
            return kExitTrue;
        }

        if (gfind->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            Gadget g = find_gadget(dg, k, budget);
            spill(out_prefix + ".digraph", write_digraph(g.digraph));
            spill(out_prefix + ".json", gadget_to_json(g) + "\n");
            std::cerr << "gadget with " << g.digraph.vertex_count() << " vertices after "
                      << g.cutoff_steps << " cutoffs\n";
            return kExitTrue;
        }

        if (gval->parsed()) {
            Gadget g = gadget_from_json(load_digraph(args.digraph), slurp(gadget_json));
            GadgetValidation val = validate_gadget(g, budget);
            if (!val.ok) std::cout << val.failed_check << "\n";
            return val.ok ? kExitTrue : kExitFalse;
        }

        if (gprof->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            std::vector<int> designated;
            std::stringstream ss(vertices_csv);
            for (std::string item; std::getline(ss, item, ',');) designated.push_back(std::stoi(item));
            ForcingProfile p = forcing_profile(dg, designated, k, budget);
            nlohmann::json j;
            std::vector<std::string> pinned;
            for (SolveStatus s : p.exists_pinned) pinned.push_back(status_name(s));
            j["exists_pinned"] = pinned;
            j["forced_equal_singleton"] = p.forced_equal_singleton;
            j["forced_equal_given_singletons"] = p.forced_equal_given_singletons;
            std::cout << j.dump() << "\n";
            return kExitTrue;
        }

        if (gasm->parsed()) {
            AttachGadget edge_piece = make_equality_gadget();
            AttachGadget node_piece = make_junction_gadget();
            if (!validate_edge_gadget(edge_piece, budget))
                throw std::runtime_error("edge piece failed validation");
            if (!validate_node_gadget(node_piece, budget))
                throw std::runtime_error("node piece failed validation");
            GeneratedInstance g = assemble_vertex_gadget(edge_piece, node_piece, degree);
            std::cout << write_digraph(g.digraph);
            if (!meta_path.empty()) spill(meta_path, instance_meta_json(g) + "\n");
            return kExitTrue;
        }

        if (gsearch->parsed()) {
            GadgetSearchParams params;
            std::stringstream ss(vertices_csv);
            for (std::string item; std::getline(ss, item, ',');)
                params.vertex_labels.push_back(std::stoi(item));
            params.samples = samples;
            params.seed = seed;
            auto found = search_edge_gadgets(params, budget);
            std::cerr << found.size() << " candidate(s) validated\n";
            for (const auto& g : found) std::cout << write_digraph(g.digraph) << "\n";
            return found.empty() ? kExitFalse : kExitTrue;
        }

        if (norm_cmd->parsed()) {
            Digraph dg = load_digraph(args.digraph);
            CutCover cover = cover_from_json(slurp(cover_path));
            CutCover normalized = normalize_symmetric_cover(dg, cover);
            spill(args.out, cover_to_json(normalized) + "\n");
            return kExitTrue;
        }

        if (bounds_cmd->parsed()) {
            if (!vertices_csv.empty()) {
                auto comma = vertices_csv.find(',');
                if (comma == std::string::npos) throw std::runtime_error("--class wants dminus,dplus");
                DegreeClassBounds b = degree_class_bounds(std::stoi(vertices_csv.substr(0, comma)),
                                                          std::stoi(vertices_csv.substr(comma + 1)));
                if (as_json) {
                    nlohmann::json j;
                    j["dminus"] = b.dminus;
                    j["dplus"] = b.dplus;
                    j["lower"] = b.lower;
                    j["upper"] = b.upper;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "c(" << b.dminus << "," << b.dplus << ") in [" << b.lower << ", "
                              << b.upper << "]\n";
                }
                return kExitTrue;
            }
            std::cout << (as_json ? bounds_table_json(kmax) : bounds_table_text(kmax));
            return kExitTrue;
        }

        if (selftest_cmd->parsed()) {
            std::mt19937_64 rng(seed);
            for (int i = 0; i < samples; ++i) {
                std::uniform_int_distribution<int> nd(2, 40);
                int nn = nd(rng);
                int kk = std::uniform_int_distribution<int>(2, 5)(rng);
                long long mk = static_cast<long long>(central_binomial(kk));
                int cap = static_cast<int>(std::min<long long>(mk - 1, nn - 1));
                std::vector<Arc> arcs;
                for (int v = 1; v < nn; ++v) {
                    int indeg = std::uniform_int_distribution<int>(0, std::min(cap, v))(rng);
                    std::vector<int> pool(v);
                    for (int u = 0; u < v; ++u) pool[u] = u;
                    std::shuffle(pool.begin(), pool.end(), rng);
                    for (int t = 0; t < indeg; ++t) arcs.push_back({pool[t], v});
                }
                Digraph dg(nn, std::move(arcs));
                CutCover cover = greedy_antichain_cover(dg, kk);
                if (!verify_cover(dg, cover).valid)
                    throw std::runtime_error("selftest: greedy antichain cover failed");
            }
            std::cout << "selftest ok (" << samples << " instances)\n";
            return kExitTrue;
        }

        throw std::runtime_error("no subcommand handled");
    } catch (const budget_exceeded_error&) {
        std::cerr << "error: search budget exceeded\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
