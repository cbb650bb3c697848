#include "upbkit/cli.hpp"

#include "upbkit/bounds.hpp"
#include "upbkit/constructions.hpp"
#include "upbkit/extendibility.hpp"
#include "upbkit/ortho_graph.hpp"
#include "upbkit/prover.hpp"
#include "upbkit/set_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace upbkit {

namespace {

using nlohmann::json;

json json_of_cvec(const CVec& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back({v[i].real(), v[i].imag()});
    return out;
}

json json_of_product(const ProductVector& v) {
    json out = json::array();
    for (const CVec& f : v.factors()) out.push_back(json_of_cvec(f));
    return out;
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Extendible: return "extendible";
        case SearchStatus::Unextendible: return "unextendible";
        default: return "infeasible";
    }
}

json json_of_certificate(const ExtendibilityCertificate& c) {
    return json{{"b1", c.b1},
                {"b2", c.b2},
                {"left_rank", c.left_rank},
                {"right_rank", c.right_rank},
                {"max_overlap", c.max_overlap},
                {"left_witness", json_of_cvec(c.left_witness)},
                {"right_witness", json_of_cvec(c.right_witness)}};
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw SetFormatError("cannot write " + output_path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

struct GlobalFlags {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string format = "text";
    int max_exact_k = 24;

    Tolerance tolerance() const { return Tolerance(tol, tol); }
    SearchOptions search() const { return SearchOptions{tolerance(), max_exact_k}; }
    bool json_mode() const { return format == "json"; }
};

int cmd_bounds(const GlobalFlags& g, int n, int d, const std::vector<int>& table_range) {
    if (!table_range.empty()) {
        const auto grid = table1(table_range[0], table_range[1], table_range[2], table_range[3]);
        if (g.json_mode()) {
            json rows = json::array();
            for (const auto& e : grid)
                rows.push_back({{"n", e.n}, {"d", e.d}, {"lo", e.lo}, {"hi", e.hi}});
            std::cout << json{{"table", rows}}.dump() << "\n";
        } else {
            for (const auto& e : grid)
                std::cout << "n=" << e.n << " d=" << e.d << " excluded <" << e.lo << "," << e.hi
                          << ">\n";
        }
        return 0;
    }
    const BoundsReport r = bounds_report(n, d);
    if (g.json_mode()) {
        std::cout << json{{"n", r.n},
                          {"d", r.d},
                          {"w", r.w},
                          {"min_gupb", r.min_gupb},
                          {"prop1_max_k", r.prop1_max_k},
                          {"max_ges_dim", r.max_ges_dim},
                          {"min_upb_steepest_cut", r.min_upb_steepest_cut},
                          {"max_upb_steepest_cut", r.max_upb_steepest_cut},
                          {"excluded_interval",
                           {r.excluded_interval.first, r.excluded_interval.second}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "n=" << r.n << " d=" << r.d << "\n"
                  << "excluded interval <" << r.excluded_interval.first << ","
                  << r.excluded_interval.second << ">\n"
                  << "min permissible genuinely unextendible cardinality: " << r.min_gupb << "\n"
                  << "max cardinality covered by the biproduct-witness construction: "
                  << r.prop1_max_k << "\n"
                  << "max genuinely entangled subspace dimension: " << r.max_ges_dim << "\n"
                  << "steepest cut (d, d^(n-1)) bipartite bounds: min " << r.min_upb_steepest_cut
                  << ", max " << r.max_upb_steepest_cut << "\n";
    }
    return 0;
}

int cmd_verify_upb(const GlobalFlags& g, const std::string& file) {
    const ProductVectorSet set = load_set(file, g.tolerance());
    const MultipartiteDecision dec = is_extendible_multipartite(set, g.search());
    if (g.json_mode()) {
        json out{{"status", status_name(dec.status)}};
        if (dec.witness) {
            out["witness"] = json_of_product(*dec.witness);
            out["partition"] = dec.partition;
            out["max_overlap"] = dec.max_overlap;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << status_name(dec.status);
        if (dec.status == SearchStatus::Extendible)
            std::cout << ": a fully product vector is orthogonal to the whole set (max overlap "
                      << dec.max_overlap << ")";
        else if (dec.status == SearchStatus::Unextendible)
            std::cout << ": no fully product vector is orthogonal to the whole set";
        else
            std::cout << ": " << set.size() << " vectors exceed the exact-search cap "
                      << g.max_exact_k;
        std::cout << "\n";
    }
    switch (dec.status) {
        case SearchStatus::Unextendible: return 0;
        case SearchStatus::Extendible: return 1;
        default: return 3;
    }
}

int cmd_check_gupb(const GlobalFlags& g, const std::string& file) {
    const ProductVectorSet set = load_set(file, g.tolerance());
    const GupbVerdict verdict = check_gupb(set, g.search());
    if (g.json_mode()) {
        json cuts = json::array();
        for (const auto& [cut, dec] : verdict.cuts) {
            json row{{"cut", cut.label()}, {"status", status_name(dec.status)}};
            if (dec.certificate) row["certificate"] = json_of_certificate(*dec.certificate);
            cuts.push_back(std::move(row));
        }
        std::cout << json{{"is_gupb_candidate", verdict.is_gupb_candidate()},
                          {"status", status_name(verdict.status)},
                          {"cuts", cuts}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& [cut, dec] : verdict.cuts) {
            std::cout << "cut " << cut.label() << ": " << status_name(dec.status);
            if (dec.certificate)
                std::cout << " (left rank " << dec.certificate->left_rank << ", right rank "
                          << dec.certificate->right_rank << ", witness overlap "
                          << dec.certificate->max_overlap << ")";
            std::cout << "\n";
        }
        std::cout << (verdict.is_gupb_candidate()
                          ? "verdict: genuinely unextendible candidate (every cut unextendible)"
                          : "verdict: not a genuinely unextendible candidate")
                  << "\n";
    }
    switch (verdict.status) {
        case SearchStatus::Unextendible: return 0;
        case SearchStatus::Extendible: return 1;
        default: return 3;
    }
}

int cmd_prove_biproduct(const GlobalFlags& g, const std::string& file) {
    const ProductVectorSet set = load_set(file, g.tolerance());
    const ProveResult res = prove_biproduct(set, g.tolerance());
    const int k = set.size();
    const int n = set.shape().sites();
    if (res.witness) {
        const BiproductWitness& w = *res.witness;
        if (g.json_mode()) {
            std::cout << json{{"witness",
                               json{{"site", w.site},
                                    {"cut", w.cut().label()},
                                    {"chosen_vertex", w.chosen_vertex},
                                    {"b1", w.b1},
                                    {"b2", w.b2},
                                    {"bulk_rank", w.bulk_rank},
                                    {"max_overlap", w.max_overlap},
                                    {"local_part", json_of_cvec(w.local_part)},
                                    {"bulk_part", json_of_cvec(w.bulk_part)},
                                    {"heterogeneous_bound_extrapolated",
                                     w.heterogeneous_bound_extrapolated}}}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "k = " << k << " vectors on " << n
                      << " sites; guaranteed same-site degree s = " << s_required(k, n) << "\n"
                      << "chosen vector " << w.chosen_vertex << ", site " << w.site << ": "
                      << w.b1.size() << " same-site orthogonal neighbors\n"
                      << "B1 = neighbors orthogonal on site " << w.site << " (" << w.b1.size()
                      << " vectors), B2 = rest (" << w.b2.size() << " vectors)\n"
                      << "bulk dimension across " << w.cut().label() << " = "
                      << set.shape().dim_excluding(w.site) << "; B2 bulk rank = " << w.bulk_rank
                      << "\n"
                      << "witness = (site-" << w.site << " factor of vector " << w.chosen_vertex
                      << ") x (bulk orthocomplement vector); max overlap " << w.max_overlap
                      << "\n";
            if (w.heterogeneous_bound_extrapolated)
                std::cout << "note: heterogeneous shape, cardinality regime extrapolated from "
                             "the per-cut dimension\n";
        }
        return 0;
    }
    const GuaranteeGap& gap = *res.gap;
    if (g.json_mode()) {
        std::cout << json{{"gap", json{{"vertex", gap.vertex},
                                       {"site", gap.site},
                                       {"t", gap.t},
                                       {"needed_t", gap.needed_t},
                                       {"margin", gap.margin}}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "no guarantee: best pair is vector " << gap.vertex << ", site " << gap.site
                  << " with t = " << gap.t << " same-site neighbors; needed t >= " << gap.needed_t
                  << " (margin " << gap.margin << ")\n";
    }
    return 1;
}

int cmd_graph(const GlobalFlags& g, const std::string& file, const std::vector<int>& highlight,
              bool all_colors, const std::string& output_path) {
    const ProductVectorSet set = load_set(file, g.tolerance());
    const OrthoGraph graph = build_graph(set, g.tolerance());
    DotOptions opts;
    opts.all_colors = all_colors;
    if (!highlight.empty()) opts.highlight = {highlight[0], highlight[1]};
    emit(to_dot(graph, opts), output_path);
    return 0;
}

int cmd_construct(const GlobalFlags& g, const std::string& kind,
                  const std::vector<std::string>& inputs, const std::string& groups_arg,
                  const std::string& output_path) {
    const Tolerance tol = g.tolerance();
    std::vector<ProductVectorSet> sets;
    for (const auto& f : inputs) sets.push_back(load_set(f, tol));
    if (kind == "shifts") {
        emit(set_to_json(shifts(tol)), output_path);
    } else if (kind == "flag") {
        emit(set_to_json(flag_construction(sets, tol)), output_path);
    } else if (kind == "tensor") {
        if (sets.size() != 2) throw std::invalid_argument("construct tensor: need 2 input sets");
        emit(set_to_json(tensor_construction(sets[0], sets[1], tol)), output_path);
    } else if (kind == "group") {
        if (sets.size() != 1) throw std::invalid_argument("construct group: need 1 input set");
        if (groups_arg.empty()) throw std::invalid_argument("construct group: missing --groups");
        std::vector<std::vector<int>> groups;
        std::string cur;
        for (char c : groups_arg + ";") {
            if (c == ';') {
                if (!cur.empty()) groups.push_back(parse_int_list(cur, ','));
                cur.clear();
            } else {
                cur += c;
            }
        }
        emit(set_to_json(grouping_reduction(sets[0], groups, tol)), output_path);
    } else {
        throw std::invalid_argument("construct: unknown kind " + kind);
    }
    return 0;
}

int cmd_gen_set(const GlobalFlags& g, const std::string& dims_arg, int k,
                const std::string& output_path) {
    GenOptions opts;
    opts.seed = g.seed;
    opts.tol = g.tolerance();
    const SystemShape shape(parse_int_list(dims_arg, ','));
    emit(set_to_json(generate_orthogonal_set(shape, k, opts)), output_path);
    return 0;
}

int cmd_seesaw(const GlobalFlags& g, const std::string& file, const std::vector<int>& cut_arg,
               int restarts, int iters) {
    const ProductVectorSet set = load_set(file, g.tolerance());
    SeesawOptions opts;
    opts.restarts = restarts;
    opts.iters = iters;
    opts.seed = g.seed;
    opts.tol = g.tolerance();
    std::optional<Bipartition> cut;
    if (!cut_arg.empty()) cut = Bipartition(cut_arg, set.shape().sites());
    const SeesawResult res = seesaw_search(set, cut, opts);
    if (g.json_mode()) {
        json out{{"found", res.found}, {"residual", res.residual}};
        if (res.witness) out["witness"] = json_of_product(*res.witness);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (res.found ? "found" : "not found") << ": best residual " << res.residual
                  << "\n";
    }
    return res.found ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"analysis toolkit for mutually orthogonal product-vector sets"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--tol", g.tol, "orthogonality/rank tolerance (default 1e-9)");
    app.add_option("--seed", g.seed, "random seed for generators and seesaw");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-exact-k", g.max_exact_k, "cardinality cap for exact search");

    auto* bounds_cmd = app.add_subcommand("bounds", "cardinality/dimension bounds");
    int n = 0, d = 0;
    std::vector<int> table_range;
    bounds_cmd->add_option("--n", n, "number of parties");
    bounds_cmd->add_option("--d", d, "local dimension");
    bounds_cmd->add_option("--table", table_range, "grid: n_lo n_hi d_lo d_hi")->expected(4);
    bounds_cmd->fallthrough();

    std::string file;
    auto* verify_cmd = app.add_subcommand("verify-upb", "decide full-product extendibility");
    verify_cmd->add_option("file", file, "set JSON")->required();
    verify_cmd->fallthrough();

    auto* gupb_cmd = app.add_subcommand("check-gupb", "decide extendibility across every cut");
    gupb_cmd->add_option("file", file, "set JSON")->required();
    gupb_cmd->fallthrough();

    auto* prove_cmd =
        app.add_subcommand("prove-biproduct", "construct a biproduct witness for the set");
    prove_cmd->add_option("file", file, "set JSON")->required();
    prove_cmd->fallthrough();

    auto* graph_cmd = app.add_subcommand("graph", "orthogonality graph as DOT");
    std::vector<int> highlight;
    bool all_colors = false;
    std::string output_path;
    graph_cmd->add_option("file", file, "set JSON")->required();
    graph_cmd->add_option("--highlight", highlight, "vertex and site to highlight")->expected(2);
    graph_cmd->add_flag("--all-colors", all_colors, "label edges with every qualifying site");
    graph_cmd->add_option("--output", output_path, "write here instead of stdout");
    graph_cmd->fallthrough();

    auto* construct_cmd = app.add_subcommand("construct", "canonical set constructions");
    std::string kind;
    std::vector<std::string> inputs;
    std::string groups_arg;
    construct_cmd->add_option("kind", kind, "shifts|flag|tensor|group")->required();
    construct_cmd->add_option("--inputs", inputs, "input set JSON files");
    construct_cmd->add_option("--groups", groups_arg, "site groups, e.g. 0,1;2,3");
    construct_cmd->add_option("--output", output_path, "write here instead of stdout");
    construct_cmd->fallthrough();

    auto* gen_cmd = app.add_subcommand("gen-set", "random mutually orthogonal product set");
    std::string dims_arg;
    int k = 0;
    gen_cmd->add_option("--dims", dims_arg, "local dimensions, e.g. 3,3,3")->required();
    gen_cmd->add_option("--k", k, "cardinality")->required();
    gen_cmd->add_option("--output", output_path, "write here instead of stdout");
    gen_cmd->fallthrough();

    auto* seesaw_cmd = app.add_subcommand("seesaw", "numerical witness search");
    std::vector<int> cut_arg;
    int restarts = 100, iters = 200;
    seesaw_cmd->add_option("file", file, "set JSON")->required();
    seesaw_cmd->add_option("--cut", cut_arg, "site subset for a biproduct search, e.g. 0 2")
        ->delimiter(',');
    seesaw_cmd->add_option("--restarts", restarts, "random restarts");
    seesaw_cmd->add_option("--iters", iters, "sweeps per restart");
    seesaw_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bounds_cmd) {
            if (table_range.empty() && (n == 0 || d == 0)) {
                std::cerr << "bounds: provide --n and --d, or --table\n";
                return 2;
            }
            return cmd_bounds(g, n, d, table_range);
        }
        if (*verify_cmd) return cmd_verify_upb(g, file);
        if (*gupb_cmd) return cmd_check_gupb(g, file);
        if (*prove_cmd) return cmd_prove_biproduct(g, file);
        if (*graph_cmd) return cmd_graph(g, file, highlight, all_colors, output_path);
        if (*construct_cmd) return cmd_construct(g, kind, inputs, groups_arg, output_path);
        if (*gen_cmd) return cmd_gen_set(g, dims_arg, k, output_path);
        if (*seesaw_cmd) return cmd_seesaw(g, file, cut_arg, restarts, iters);
        return 2;
    } catch (const InfeasiblePattern& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const SetFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotMutuallyOrthogonal& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BoundsDomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace upbkit
