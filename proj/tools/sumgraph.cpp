// Command-line front end: builds graphs, verifies labellings, runs the
// bounded searches, the exact linear algebra, and the paper claim ledger.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumgraph/claims.hpp"
#include "sumgraph/constructors.hpp"
#include "sumgraph/enumerate.hpp"
#include "sumgraph/error.hpp"
#include "sumgraph/exactla.hpp"
#include "sumgraph/fib.hpp"
#include "sumgraph/fixtures.hpp"
#include "sumgraph/graph6.hpp"
#include "sumgraph/product.hpp"
#include "sumgraph/report.hpp"
#include "sumgraph/search.hpp"

using namespace sumgraph;
using nlohmann::json;

namespace {

Graph resolve_graph(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        auto graphs = read_graph6_file(text.substr(1));
        if (graphs.empty()) throw Error("InvalidParameter", "no graphs in " + text.substr(1));
        return graphs[0];
    }
    try {
        return build_family(parse_family_spec(text));
    } catch (const Error&) {
        return parse_graph6(text);
    }
}

Labelling labelling_from_args(const std::string& magma, const std::string& labels, bool relaxed,
                              const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("FileNotFound", "cannot open " + file);
        json j;
        in >> j;
        return labelling_from_json(j);
    }
    MagmaSpec spec = parse_magma_name(magma);
    Labelling lab{spec, parse_labels(spec, labels), relaxed};
    return lab;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int worker_default() {
    if (const char* env = std::getenv("SUMGRAPH_JOBS")) return std::max(1, std::atoi(env));
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sum-graph labellings over magmas: verification, search, and claim checks"};
    app.require_subcommand(1);

    try {
        // ---- build ----
        std::string build_graph, build_format = "g6";
        auto* cmd_build = app.add_subcommand("build", "build a standard graph family");
        cmd_build->add_option("--graph", build_graph, "family name, e.g. C4, Q4, K3,3, C4+3K1")
            ->required();
        cmd_build->add_option("--format", build_format, "g6 | dot | json");

        // ---- convert ----
        std::string conv_in, conv_to = "json";
        auto* cmd_conv = app.add_subcommand("convert", "convert graph6 to dot/json");
        cmd_conv->add_option("--in", conv_in, "graph6 string or @file.g6")->required();
        cmd_conv->add_option("--to", conv_to, "dot | json | g6");

        // ---- verify ----
        std::string v_graph, v_magma = "z", v_labels, v_file;
        bool v_relaxed = false, v_strong = false;
        auto* cmd_verify = app.add_subcommand("verify", "verify a labelling against a target graph");
        cmd_verify->add_option("--graph", v_graph, "target graph (family or graph6)")->required();
        cmd_verify->add_option("--magma", v_magma, "magma name, e.g. z, n, z29, z4x4, u11, set4:union");
        cmd_verify->add_option("--labels", v_labels, "label list, e.g. 1,3,6,8 or (0,1),(1,0)");
        cmd_verify->add_option("--labelling", v_file, "labelling JSON file");
        cmd_verify->add_flag("--relaxed", v_relaxed, "allow repeated labels");
        cmd_verify->add_flag("--strong", v_strong, "also require strongness");

        // ---- construct ----
        std::string c_name, c_magma, c_a0, c_a1, c_verify_against;
        std::vector<long> c_params;
        auto* cmd_construct = app.add_subcommand("construct", "emit a closed-form candidate labelling");
        cmd_construct
            ->add_option("name", c_name,
                         "harary-path | harary-matching | li-matching | empty-graph | empty-graph-alt "
                         "| c4-abelian | fib-cycle | c4l | union-cycle | union-clique | "
                         "boolean-clique | relaxed-clique | universal")
            ->required();
        cmd_construct->add_option("params", c_params, "numeric parameters");
        cmd_construct->add_option("--magma", c_magma, "magma for c4-abelian / fib-cycle");
        cmd_construct->add_option("--a0", c_a0, "generator a0 (fib-cycle) or a (c4-abelian)");
        cmd_construct->add_option("--a1", c_a1, "generator a1 (fib-cycle)");
        cmd_construct->add_option("--verify-against", c_verify_against, "also verify vs this family");

        // ---- search / radius / sum-number / mod-sweep ----
        std::string s_graph, s_magma;
        long s_radius = 0, s_maxlabel = 0, s_mod = 0;
        bool s_relaxed = false, s_strong = false, s_noprune = false;
        long long s_budget = -1;
        auto* cmd_search = app.add_subcommand("search", "bounded existence search for a labelling");
        cmd_search->add_option("--graph", s_graph)->required();
        cmd_search->add_option("--radius", s_radius, "integral search, labels in [-r, r]");
        cmd_search->add_option("--max-label", s_maxlabel, "natural search, labels in [1, B]");
        cmd_search->add_option("--mod", s_mod, "mod-sum search over Z_m");
        cmd_search->add_option("--magma", s_magma, "finite magma search");
        cmd_search->add_flag("--relaxed", s_relaxed);
        cmd_search->add_flag("--strong", s_strong);
        bool s_forbid_zero = false;
        cmd_search->add_flag("--forbid-zero", s_forbid_zero,
                             "exclude the label 0 (the published tables' convention)");
        cmd_search->add_flag("--no-prune", s_noprune, "disable propagation (slow; same outcomes)");
        cmd_search->add_option("--budget", s_budget, "node budget; exceeded runs are inconclusive");

        std::string r_graph;
        long r_cap = 10;
        auto* cmd_radius = app.add_subcommand("radius", "least labelling radius by deepening");
        cmd_radius->add_option("--graph", r_graph)->required();
        cmd_radius->add_option("--cap", r_cap);

        std::string sn_graph;
        long sn_max_isolated = 5, sn_maxlabel = 50;
        auto* cmd_sumnum = app.add_subcommand("sum-number", "least k with G u kK_1 an N-graph");
        cmd_sumnum->add_option("--graph", sn_graph)->required();
        cmd_sumnum->add_option("--max-isolated", sn_max_isolated);
        cmd_sumnum->add_option("--max-label", sn_maxlabel);

        std::string ms_graph;
        long ms_cap = 30;
        auto* cmd_modsweep = app.add_subcommand("mod-sweep", "ascending modulus sweep");
        cmd_modsweep->add_option("--graph", ms_graph)->required();
        cmd_modsweep->add_option("--cap", ms_cap);

        // ---- count ----
        std::string cnt_file;
        long cnt_cap = kCorpusRadiusCap;
        int cnt_jobs = worker_default();
        bool cnt_isg_only = false, cnt_risg_only = false;
        auto* cmd_count = app.add_subcommand("count", "corpus counts over a graph6 file");
        cmd_count->add_option("--file", cnt_file, "graph6 file, one graph per line")->required();
        cmd_count->add_option("--radius-cap", cnt_cap);
        cmd_count->add_option("--jobs", cnt_jobs);
        cmd_count->add_flag("--isg-only", cnt_isg_only);
        cmd_count->add_flag("--risg-only", cnt_risg_only);
        bool cnt_forbid_zero = false;
        cmd_count->add_flag("--forbid-zero", cnt_forbid_zero,
                            "exclude the label 0 (the published tables' convention)");

        // ---- fib ----
        long fp_n = 0;
        auto* cmd_fib = app.add_subcommand("fib-params", "Fibonacci labelling parameter tuple");
        cmd_fib->add_option("n", fp_n)->required();

        long dr_maxk = 10;
        bool dr_json = false;
        auto* cmd_delta = app.add_subcommand("delta-report", "delta-ratio exploration table");
        cmd_delta->add_option("--max-k", dr_maxk);
        cmd_delta->add_flag("--json", dr_json);

        // ---- kernel / primitives ----
        std::string k_graph, k_labels, k_fixture;
        auto* cmd_kernel = app.add_subcommand("kernel", "labelling kernel and nullspace basis");
        cmd_kernel->add_option("--graph", k_graph);
        cmd_kernel->add_option("--labels", k_labels, "integral labels");
        cmd_kernel->add_option("--fixture", k_fixture, "use an embedded fixture, e.g. FIX-9.3-Q4-r46");

        std::string pr_graph, pr_labels, pr_fixture;
        long pr_box = 50;
        auto* cmd_prims = app.add_subcommand("primitives", "primitive labellings from a kernel box scan");
        cmd_prims->add_option("--graph", pr_graph);
        cmd_prims->add_option("--labels", pr_labels);
        cmd_prims->add_option("--fixture", pr_fixture);
        cmd_prims->add_option("--box", pr_box);

        // ---- random-cycle ----
        int rc_n = 9;
        uint64_t rc_seed = 1;
        long rc_prime_bound = 100, rc_iters = 300000;
        auto* cmd_rc = app.add_subcommand("random-cycle", "random linear-system method for C_n");
        cmd_rc->add_option("--n", rc_n);
        cmd_rc->add_option("--seed", rc_seed);
        cmd_rc->add_option("--prime-bound", rc_prime_bound);
        cmd_rc->add_option("--max-iters", rc_iters);

        // ---- product ----
        std::string p_ga, p_gb, p_la, p_lb;
        auto* cmd_prod = app.add_subcommand("product", "strong labelling of a direct product");
        cmd_prod->add_option("--graphA", p_ga)->required();
        cmd_prod->add_option("--graphB", p_gb)->required();
        cmd_prod->add_option("--labelsA", p_la)->required();
        cmd_prod->add_option("--labelsB", p_lb)->required();

        // ---- claims ----
        auto* cmd_claims = app.add_subcommand("claims", "paper claim ledger");
        auto* claims_run = cmd_claims->add_subcommand("run", "execute claims");
        auto* claims_list = cmd_claims->add_subcommand("list", "list claim ids");
        std::string cl_filter, cl_corpus;
        int cl_jobs = worker_default();
        bool cl_json = false;
        claims_run->add_option("--filter", cl_filter, "substring of claim ids");
        claims_run->add_option("--corpus-dir", cl_corpus, "directory with graphs<n>.g6 files");
        claims_run->add_option("--jobs", cl_jobs);
        claims_run->add_flag("--json", cl_json);

        // ---- gen-graphs ----
        int gg_n = 5;
        std::string gg_out;
        int gg_jobs = worker_default();
        auto* cmd_gen = app.add_subcommand("gen-graphs", "enumerate pairwise non-isomorphic graphs");
        cmd_gen->add_option("--n", gg_n)->required();
        cmd_gen->add_option("--out", gg_out, "output file (default stdout)");
        cmd_gen->add_option("--jobs", gg_jobs);

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;  // usage errors exit 2
        }

        if (*cmd_build) {
            Graph g = build_family(parse_family_spec(build_graph));
            if (build_format == "g6") std::cout << emit_graph6(g) << "\n";
            else if (build_format == "dot") std::cout << emit_report(g, {}, ReportFormat::Dot);
            else std::cout << emit_report(g, {}, ReportFormat::Json);
            return 0;
        }

        if (*cmd_conv) {
            Graph g = resolve_graph(conv_in);
            if (conv_to == "dot") std::cout << emit_report(g, {}, ReportFormat::Dot);
            else if (conv_to == "g6") std::cout << emit_graph6(g) << "\n";
            else std::cout << emit_report(g, {}, ReportFormat::Json);
            return 0;
        }

        if (*cmd_verify) {
            Graph target = resolve_graph(v_graph);
            Labelling lab = labelling_from_args(v_magma, v_labels, v_relaxed, v_file);
            Verdict verdict = verify(lab, target);
            json out = verdict_to_json(verdict, lab);
            if (v_strong) out["strong"] = is_strong(lab);
            emit(out);
            bool ok = verdict.ok && (!v_strong || out["strong"].get<bool>());
            return ok ? 0 : 1;
        }

        if (*cmd_construct) {
            auto param = [&](size_t i, long fallback = -1) {
                if (i < c_params.size()) return c_params[i];
                if (fallback >= 0) return fallback;
                throw Error("InvalidParameter", "missing parameter for " + c_name);
            };
            Labelling lab;
            json extra;
            if (c_name == "harary-path") lab = harary_path(static_cast<int>(param(0)));
            else if (c_name == "harary-matching") lab = matching_harary_style(static_cast<int>(param(0)));
            else if (c_name == "li-matching") lab = matching_li(static_cast<int>(param(0)));
            else if (c_name == "empty-graph") lab = empty_graph(static_cast<int>(param(0)));
            else if (c_name == "empty-graph-alt") lab = empty_graph_even_alt(static_cast<int>(param(0)));
            else if (c_name == "c4l") lab = c4l_theorem_labelling(static_cast<int>(param(0)));
            else if (c_name == "union-cycle") lab = union_cycle(static_cast<int>(param(0)));
            else if (c_name == "union-clique")
                lab = union_clique(static_cast<int>(param(0)), static_cast<int>(param(1)));
            else if (c_name == "boolean-clique") lab = boolean_clique(param(0));
            else if (c_name == "relaxed-clique") lab = relaxed_clique(static_cast<int>(param(0)));
            else if (c_name == "c4-abelian") {
                MagmaSpec spec = parse_magma_name(c_magma);
                lab = c4_over_abelian(spec, parse_labels(spec, c_a0).at(0));
            } else if (c_name == "fib-cycle") {
                MagmaSpec spec = parse_magma_name(c_magma);
                auto res = fibonacci_cycle(spec, parse_labels(spec, c_a0).at(0),
                                           parse_labels(spec, c_a1).at(0),
                                           static_cast<int>(param(0)));
                lab = res.labelling;
                extra["conditions_ok"] = res.conditions_ok;
                if (!res.conditions_ok) extra["condition_note"] = res.condition_note;
                extra["delta"] = res.params.delta.str();
            } else if (c_name == "universal") {
                Graph g = resolve_graph(c_a0.empty() ? "K2" : c_a0);
                auto [spec, ulab] = universal_magma(g);
                lab = ulab;
            } else {
                throw Error("InvalidParameter", "unknown constructor '" + c_name + "'");
            }
            json out = labelling_to_json(lab);
            if (!extra.is_null()) out["construction"] = extra;
            if (!c_verify_against.empty()) {
                Graph target = resolve_graph(c_verify_against);
                out["verdict"] = verdict_to_json(verify(lab, target), lab);
            }
            emit(out);
            return 0;
        }

        if (*cmd_search) {
            SearchProblem prob;
            prob.graph = resolve_graph(s_graph);
            prob.relaxed = s_relaxed;
            prob.strong = s_strong;
            if (s_radius > 0) {
                prob.domain = DomainKind::IntRadius;
                prob.bound = s_radius;
            } else if (s_maxlabel > 0) {
                prob.domain = DomainKind::NatMax;
                prob.bound = s_maxlabel;
            } else if (s_mod > 0) {
                prob.domain = DomainKind::Mod;
                prob.bound = s_mod;
            } else if (!s_magma.empty()) {
                prob.domain = DomainKind::FiniteMagma;
                prob.magma = parse_magma_name(s_magma);
            } else {
                throw Error("InvalidParameter", "pick one of --radius/--max-label/--mod/--magma");
            }
            prob.forbid_zero = s_forbid_zero;
            SolveOptions opts;
            opts.prune = !s_noprune;
            opts.node_budget = s_budget;
            SearchOutcome out = solve(prob, opts);
            json j;
            j["found"] = out.found;
            j["nodes_expanded"] = out.nodes_expanded;
            j["bound"] = out.bound;
            if (out.aborted) j["aborted"] = true;
            if (out.found) j["witness"] = labelling_to_json(*out.witness, prob.graph);
            emit(j);
            return 0;
        }

        if (*cmd_radius) {
            RadiusResult res = radius(resolve_graph(r_graph), r_cap);
            json j;
            j["above_cap"] = res.above_cap;
            j["radius"] = res.above_cap ? json() : json(res.value);
            j["cap"] = r_cap;
            if (res.witness) j["witness"] = labelling_to_json(*res.witness);
            emit(j);
            return 0;
        }

        if (*cmd_sumnum) {
            SumNumberResult res =
                sum_number_bounded(resolve_graph(sn_graph), sn_max_isolated, sn_maxlabel);
            json j;
            j["above_cap"] = res.above_cap;
            j["sum_number"] = res.above_cap ? json() : json(res.k);
            j["max_label"] = sn_maxlabel;
            if (res.witness) j["witness"] = labelling_to_json(*res.witness);
            emit(j);
            return 0;
        }

        if (*cmd_modsweep) {
            ModSweepResult res = mod_sum_sweep(resolve_graph(ms_graph), ms_cap);
            json j;
            j["found"] = res.found;
            j["cap"] = ms_cap;
            j["conclusive_bound"] = res.conclusive_bound.str();
            if (res.found) {
                j["m"] = res.modulus;
                j["witness"] = labelling_to_json(*res.witness);
            }
            emit(j);
            return 0;
        }

        if (*cmd_count) {
            auto graphs = read_graph6_file(cnt_file);
            CountMode mode = CountMode::Both;
            if (cnt_isg_only) mode = CountMode::Isg;
            if (cnt_risg_only) mode = CountMode::Risg;
            CorpusCount c = count_corpus(graphs, cnt_cap, cnt_jobs, mode, cnt_forbid_zero);
            json j;
            j["n"] = c.n;
            j["t"] = c.total;
            if (c.isg >= 0) j["isg"] = c.isg;
            if (c.risg >= 0) j["risg"] = c.risg;
            j["radius_cap"] = c.bound;
            j["zero_free"] = c.zero_free;
            emit(j);
            return 0;
        }

        if (*cmd_fib) {
            FibParams p = fib_params(fp_n);
            json j;
            j["n"] = p.n;
            for (auto [name, value] : std::initializer_list<std::pair<const char*, const BigInt*>>{
                     {"d", &p.d}, {"x", &p.x}, {"y", &p.y}, {"z", &p.z}, {"q", &p.q},
                     {"q1", &p.q1}, {"e", &p.e}, {"z1", &p.z1}, {"delta", &p.delta}})
                j[name] = value->str();
            emit(j);
            return 0;
        }

        if (*cmd_delta) {
            DeltaRatioReport rep = delta_ratio_report(dr_maxk);
            if (dr_json) {
                json j;
                j["phi"] = rep.phi_50_digits;
                j["reference_limits"] = {{"4k", rep.limit_4k}, {"6k", rep.limit_6k}};
                json progs = json::array();
                for (const auto& prog : rep.progressions) {
                    json p;
                    p["step"] = prog.step;
                    p["residue"] = prog.residue;
                    json rows = json::array();
                    for (const auto& row : prog.rows) {
                        json r{{"n", row.n}, {"delta", row.delta.str()}};
                        if (row.has_ratio) r["ratio"] = row.ratio;
                        rows.push_back(r);
                    }
                    p["rows"] = rows;
                    progs.push_back(p);
                }
                j["progressions"] = progs;
                emit(j);
            } else {
                std::cout << "phi = " << rep.phi_50_digits << "\n";
                printf("conjectured limits: 2+phi = %.10f (n=4k+r), 13+8/phi = %.10f (n=6k+r)\n\n",
                       rep.limit_4k, rep.limit_6k);
                for (const auto& prog : rep.progressions) {
                    printf("progression n = %dk+%d\n", prog.step, prog.residue);
                    printf("  %6s  %-28s %s\n", "n", "delta(n)", "ratio");
                    for (const auto& row : prog.rows) {
                        if (row.has_ratio)
                            printf("  %6ld  %-28s %.10f\n", row.n, row.delta.str().c_str(), row.ratio);
                        else
                            printf("  %6ld  %-28s %s\n", row.n, row.delta.str().c_str(), "-");
                    }
                    printf("\n");
                }
            }
            return 0;
        }

        auto kernel_inputs = [&](const std::string& graph, const std::string& labels,
                                 const std::string& fixture_id) {
            if (!fixture_id.empty()) {
                const Fixture& fx = fixture(fixture_id);
                return std::make_pair(fx.target, fx.labelling);
            }
            Graph g = resolve_graph(graph);
            MagmaSpec spec = MagmaSpec::int_add();
            Labelling lab{spec, parse_labels(spec, labels), false};
            return std::make_pair(g, lab);
        };

        if (*cmd_kernel) {
            auto [g, lab] = kernel_inputs(k_graph, k_labels, k_fixture);
            KernelResult kr = labelling_kernel(g, lab);
            json j;
            j["dim"] = static_cast<long>(kr.basis.size());
            j["rows"] = json::array();
            for (const auto& row : kr.system.rows) j["rows"].push_back({row[0], row[1], row[2]});
            j["basis"] = json::array();
            for (const auto& vec : kr.basis) {
                json v = json::array();
                for (const auto& x : vec) v.push_back(x.str());
                j["basis"].push_back(v);
            }
            auto coords = coords_in_basis(kr.basis, [&] {
                std::vector<BigInt> v;
                for (const auto& e : lab.labels) v.push_back(e.num());
                return v;
            }());
            if (coords) {
                json c = json::array();
                for (const auto& x : *coords)
                    c.push_back(Rational(x).str());
                j["labelling_coordinates"] = c;
            }
            emit(j);
            return 0;
        }

        if (*cmd_prims) {
            auto [g, lab] = kernel_inputs(pr_graph, pr_labels, pr_fixture);
            KernelResult kr = labelling_kernel(g, lab);
            auto prims = enumerate_primitive_labellings(g, kr.basis, pr_box);
            json j;
            j["box"] = pr_box;
            j["count"] = static_cast<long>(prims.size());
            j["labellings"] = json::array();
            for (const auto& p : prims) j["labellings"].push_back(labelling_to_json(p));
            emit(j);
            return 0;
        }

        if (*cmd_rc) {
            RandomCycleResult res = random_cycle_search(rc_n, rc_seed, rc_prime_bound, rc_iters);
            json j;
            j["iterations"] = res.iterations;
            j["warnings"] = res.warnings;
            j["hits"] = json::array();
            for (const auto& hit : res.hits) {
                json h;
                h["prime"] = hit.prime.str();
                h["det"] = hit.det.str();
                h["g"] = hit.g;
                h["labelling"] = labelling_to_json(hit.labelling);
                j["hits"].push_back(h);
            }
            emit(j);
            return 0;
        }

        if (*cmd_prod) {
            Graph ga = resolve_graph(p_ga), gb = resolve_graph(p_gb);
            MagmaSpec z = MagmaSpec::int_add();
            Labelling la{z, parse_labels(z, p_la), false};
            Labelling lb{z, parse_labels(z, p_lb), false};
            Labelling prod = product_labelling(ga, la, gb, lb);
            Graph target = direct_product(ga, gb);
            json j = labelling_to_json(prod, target);
            j["verdict"] = verdict_to_json(verify(prod, target), prod);
            j["strong"] = is_strong(prod);
            emit(j);
            return 0;
        }

        if (*cmd_claims) {
            if (*claims_list) {
                for (const auto& id : claim_ids()) std::cout << id << "\n";
                return 0;
            }
            if (*claims_run) {
                ClaimOptions opts;
                opts.filter = cl_filter;
                opts.corpus_dir = cl_corpus;
                if (opts.corpus_dir.empty())
                    if (const char* env = std::getenv("SUMGRAPH_CORPUS_DIR")) opts.corpus_dir = env;
                opts.jobs = cl_jobs;
                auto records = run_claims(opts);
                if (cl_json) {
                    json j = json::array();
                    for (const auto& r : records) {
                        json rec;
                        rec["id"] = r.id;
                        rec["section"] = r.section;
                        rec["command"] = r.command;
                        rec["expected"] =
                            r.expected == ClaimRecord::Expected::Pass ? "PASS" : "REPORT";
                        rec["actual"] = r.actual == ClaimRecord::Actual::Pass ? "PASS"
                                        : r.actual == ClaimRecord::Actual::Fail ? "FAIL"
                                                                                : "REPORT-ONLY";
                        rec["witness"] = r.witness;
                        if (!r.detail.empty()) rec["detail"] = r.detail;
                        j.push_back(rec);
                    }
                    emit(j);
                } else {
                    std::cout << render_claim_table(records);
                }
                return claims_exit_code(records);
            }
            std::cerr << "claims: pick 'run' or 'list'\n";
            return 2;
        }

        if (*cmd_gen) {
            auto graphs = enumerate_nonisomorphic(gg_n, gg_jobs);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!gg_out.empty()) {
                file.open(gg_out);
                if (!file) throw Error("FileNotFound", "cannot write " + gg_out);
                out = &file;
            }
            for (const auto& g : graphs) *out << emit_graph6(g) << "\n";
            std::cerr << graphs.size() << " graphs on " << gg_n << " vertices\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
