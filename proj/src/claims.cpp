#include "sumgraph/claims.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

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

namespace sumgraph {

using nlohmann::json;
using Actual = ClaimRecord::Actual;
using Expected = ClaimRecord::Expected;

namespace {

struct Claim {
    std::string id;
    std::string section;
    std::string command;
    Expected expected;
    std::function<std::pair<Actual, json>(const ClaimOptions&)> run;
};

std::pair<Actual, json> pass_if(bool ok, json witness = {}) {
    return {ok ? Actual::Pass : Actual::Fail, std::move(witness)};
}

// REPORT verdict for a candidate construction: PASS/FAIL plus, on FAIL, a
// witnessing chord that re-verifies against the induced graph.
std::pair<Actual, json> report_construction(const Labelling& lab, const Graph& target) {
    Verdict v = verify(lab, target);
    json w;
    w["verdict"] = v.ok ? "PASS" : "FAIL";
    w["labelling"] = labelling_to_json(lab);
    if (!v.ok) {
        json chords = json::array();
        Graph induced = induced_graph(lab);
        for (const auto& s : v.spurious_edges) {
            json c;
            c["chord"] = {s.u, s.v};
            c["sum"] = element_to_json(lab.spec, s.sum);
            c["witness_vertex"] = s.witness_vertex;
            c["reverifies"] = induced.edge(s.u, s.v) && !target.edge(s.u, s.v);
            chords.push_back(c);
        }
        w["spurious"] = chords;
        json missing = json::array();
        for (auto [a, b] : v.missing_edges) missing.push_back({a, b});
        w["missing"] = missing;
    }
    return {Actual::ReportOnly, w};
}

bool exhausted(const Graph& g, DomainKind domain, long bound, bool relaxed = false) {
    SearchProblem p{g, domain, bound, {}, relaxed, false};
    return !solve(p).found;
}

bool found_over_magma(const Graph& g, const MagmaSpec& spec) {
    SearchProblem p{g, DomainKind::FiniteMagma, 0, spec, false, false};
    return solve(p).found;
}

json count_row_json(const CorpusCount& c) {
    json j;
    j["n"] = c.n;
    j["t"] = c.total;
    j["isg"] = c.isg;
    j["risg"] = c.risg;
    j["radius_cap"] = c.bound;
    return j;
}

std::vector<Claim> build_ledger() {
    std::vector<Claim> ledger;
    auto add = [&](std::string id, std::string section, std::string command, Expected exp,
                   std::function<std::pair<Actual, json>(const ClaimOptions&)> run) {
        ledger.push_back({std::move(id), std::move(section), std::move(command), exp, std::move(run)});
    };

    // ---- fixtures: every printed labelling must verify exactly ----
    for (const auto& fx : all_fixtures()) {
        add(fx.id, fx.section, "sumgraph claims run --filter " + fx.id, Expected::Pass,
            [&fx](const ClaimOptions&) {
                Verdict v = verify(fx.labelling, fx.target);
                bool ok = v.ok;
                json w;
                w["verdict"] = verdict_to_json(v, fx.labelling);
                if (fx.radius >= 0 && fx.labelling.spec.kind == MagmaKind::IntAdd) {
                    BigInt mx = 0;
                    for (const auto& e : fx.labelling.labels)
                        mx = std::max(mx, e.num() < 0 ? -e.num() : e.num());
                    w["radius"] = static_cast<long>(mx);
                    ok = ok && mx == fx.radius;
                }
                return pass_if(ok, w);
            });
    }

    add("FIX-4-sumiso", "4", "sumgraph claims run --filter FIX-4-sumiso", Expected::Pass,
        [](const ClaimOptions&) {
            const Fixture& a = fixture("FIX-4-Z5");
            const Fixture& b = fixture("FIX-4-U11");
            bool ok = check_sum_iso(a.labelling, b.labelling, z5_units11_iso_map());
            // and a broken map must be rejected
            bool broken = check_sum_iso(a.labelling, b.labelling, {1, 0, 2, 3});
            return pass_if(ok && !broken);
        });

    // ---- section 2 ----
    add("P2-harary-path", "2", "sumgraph construct harary-path 10 | sumgraph verify --graph P10",
        Expected::Pass, [](const ClaimOptions&) {
            for (int n = 4; n <= 12; ++n)
                if (!verify(harary_path(n), build_family(FamilySpec::path(n))).ok)
                    return pass_if(false, {{"n", n}});
            return pass_if(true);
        });

    add("R2-universal", "2", "sumgraph claims run --filter R2-universal", Expected::Pass,
        [](const ClaimOptions&) {
            for (const char* name : {"K2", "3K1", "petersen"}) {
                Graph g = build_family(parse_family_spec(name));
                auto [spec, lab] = universal_magma(g);
                if (!verify(lab, g).ok) return pass_if(false, {{"graph", name}});
            }
            return pass_if(true);
        });

    add("D3-relaxed-clique", "2", "sumgraph construct relaxed-clique 4", Expected::Pass,
        [](const ClaimOptions&) {
            for (int n : {1, 4, 10}) {
                Labelling lab = relaxed_clique(n);
                if (!verify(lab, build_family(FamilySpec::complete(n))).ok)
                    return pass_if(false, {{"n", n}});
                if (n > 1 && is_strong(lab)) return pass_if(false, {{"n", n}, {"strong", true}});
            }
            return pass_if(true);
        });

    add("R2-sum-number-C4", "2", "sumgraph sum-number --graph C4 --max-label 30", Expected::Pass,
        [](const ClaimOptions&) {
            auto r = sum_number_bounded(build_family(FamilySpec::cycle(4)), 3, 30);
            return pass_if(!r.above_cap && r.k == 3, {{"k", r.k}});
        });
    add("R2-sum-number-C6", "2", "sumgraph sum-number --graph C6 --max-label 50", Expected::Pass,
        [](const ClaimOptions&) {
            auto r = sum_number_bounded(build_family(FamilySpec::cycle(6)), 3, 50);
            return pass_if(!r.above_cap && r.k == 2, {{"k", r.k}});
        });
    add("R2-sum-number-tree", "2", "sumgraph sum-number --graph K2 --max-label 10", Expected::Pass,
        [](const ClaimOptions&) {
            auto r = sum_number_bounded(build_family(FamilySpec::complete(2)), 2, 10);
            return pass_if(!r.above_cap && r.k == 1, {{"k", r.k}});
        });

    // ---- section 3 ----
    add("P3.1-union-cycles", "3.1", "sumgraph construct union-cycle k", Expected::Pass,
        [](const ClaimOptions&) {
            for (int k = 2; k <= 6; ++k)
                if (!verify(union_cycle(k), build_family(FamilySpec::cycle(2 * k))).ok)
                    return pass_if(false, {{"k", k}});
            return pass_if(true);
        });

    add("P3.1-odd-cycle-neg", "3.1", "sumgraph search --graph C5 --magma set<s>:union",
        Expected::Pass, [](const ClaimOptions&) {
            for (int s = 0; s <= 5; ++s)
                if (found_over_magma(build_family(FamilySpec::cycle(5)),
                                     MagmaSpec::set_magma(s, SetOp::Union)))
                    return pass_if(false, {{"s", s}, {"cycle", 5}});
            for (int s = 0; s <= 4; ++s)
                if (found_over_magma(build_family(FamilySpec::cycle(7)),
                                     MagmaSpec::set_magma(s, SetOp::Union)))
                    return pass_if(false, {{"s", s}, {"cycle", 7}});
            return pass_if(true, {{"bounds", "C5: s <= 5, C7: s <= 4"}});
        });

    add("P3.1-Km-chain", "3.1", "sumgraph construct union-clique n s", Expected::Pass,
        [](const ClaimOptions&) {
            for (int s = 0; s <= 5; ++s)
                for (int n = 1; n <= s + 1; ++n)
                    if (!verify(union_clique(n, s), build_family(FamilySpec::complete(n))).ok)
                        return pass_if(false, {{"n", n}, {"s", s}});
            bool too_small = false;
            try {
                union_clique(4, 2);
            } catch (const Error& e) {
                too_small = e.code() == "UniverseTooSmall";
            }
            return pass_if(too_small);
        });

    add("P3.2-boolean-cliques", "3.2", "sumgraph construct boolean-clique m", Expected::Pass,
        [](const ClaimOptions&) {
            for (long m : {1, 2, 3, 4, 7, 8, 15, 16})
                if (!verify(boolean_clique(m), build_family(FamilySpec::complete(static_cast<int>(m)))).ok)
                    return pass_if(false, {{"m", m}});
            for (long m : {5, 6, 9, 10}) {
                try {
                    boolean_clique(m);
                    return pass_if(false, {{"m", m}, {"expected", "NotRepresentable"}});
                } catch (const Error& e) {
                    if (e.code() != "NotRepresentable") throw;
                }
            }
            // bounded converse: K_5 and K_6 admit no symdiff labelling for s <= 4
            for (int m : {5, 6})
                for (int s = 0; s <= 4; ++s)
                    if (found_over_magma(build_family(FamilySpec::complete(m)),
                                         MagmaSpec::set_magma(s, SetOp::SymDiff)))
                        return pass_if(false, {{"m", m}, {"s", s}});
            return pass_if(true, {{"bounds", "converse checked for s <= 4"}});
        });

    add("P3.3-C4-complement-neg", "3.3", "sumgraph search --graph C4 --magma set<s>:complement-union",
        Expected::Pass, [](const ClaimOptions&) {
            for (int s = 0; s <= 4; ++s) {
                if (found_over_magma(build_family(FamilySpec::cycle(4)),
                                     MagmaSpec::set_magma(s, SetOp::ComplementUnion)))
                    return pass_if(false, {{"s", s}, {"op", "complement-union"}});
                if (found_over_magma(build_family(FamilySpec::cycle(4)),
                                     MagmaSpec::set_magma(s, SetOp::ComplementIntersection)))
                    return pass_if(false, {{"s", s}, {"op", "complement-intersection"}});
            }
            return pass_if(true, {{"bounds", "s <= 4"}});
        });

    // ---- section 4 ----
    add("P4-C4-abelian", "4", "sumgraph claims run --filter P4-C4-abelian", Expected::Pass,
        [](const ClaimOptions&) {
            Graph c4 = build_family(FamilySpec::cycle(4));
            json sweep = json::array();
            for (long n = 1; n <= 25; ++n) {
                bool any = false;
                for (const auto& spec : abelian_groups_of_order(n))
                    if (found_over_magma(c4, spec)) { any = true; break; }
                sweep.push_back({{"order", n}, {"found", any}});
                if (any != (n % 5 == 0)) return pass_if(false, sweep);
            }
            return pass_if(true, sweep);
        });

    add("CONS-4-c4-generators", "4", "sumgraph construct c4-abelian", Expected::Pass,
        [](const ClaimOptions&) {
            Graph c4 = build_family(FamilySpec::cycle(4));
            if (!verify(c4_over_abelian(MagmaSpec::mod_add(5), Element(BigInt(1))), c4).ok)
                return pass_if(false, {{"case", "Z5 a=1"}});
            if (!verify(c4_over_abelian(MagmaSpec::mod_add(10), Element(BigInt(2))), c4).ok)
                return pass_if(false, {{"case", "Z10 a=2"}});
            try {
                c4_over_abelian(MagmaSpec::mod_add(7), Element(BigInt(3)));
                return pass_if(false, {{"case", "Z7 should reject"}});
            } catch (const Error& e) {
                if (e.code() != "InvalidGenerator") throw;
            }
            return pass_if(true);
        });

    // ---- section 5 ----
    add("P5-gcd-closed-form", "5", "sumgraph fib-params n", Expected::Pass,
        [](const ClaimOptions&) {
            for (long n = 3; n <= 300; ++n)
                if (gcd_fn_closed_form(n) != big_gcd(fib(n), fib(n + 1) - 1))
                    return pass_if(false, {{"n", n}});
            return pass_if(true);
        });

    add("P5-fib-params", "5", "sumgraph fib-params 15", Expected::Pass,
        [](const ClaimOptions&) {
            FibParams p15 = fib_params(15);
            FibParams p6 = fib_params(6);
            bool ok = p15.d == 2 && p15.z == 162 && p15.delta == 682 && p15.x == 118 &&
                      p15.y == -73 && p6.d == 4 && p6.z == -4 && p6.delta == 4;
            json w;
            w["n15"] = {{"d", p15.d.str()}, {"z", p15.z.str()}, {"delta", p15.delta.str()}};
            w["n6"] = {{"d", p6.d.str()}, {"z", p6.z.str()}, {"delta", p6.delta.str()}};
            return pass_if(ok, w);
        });

    add("CONS-5-fib-cycles", "5", "sumgraph construct fib-cycle", Expected::Pass,
        [](const ClaimOptions&) {
            auto c15 = fibonacci_cycle(MagmaSpec::mod_add(682), Element(BigInt(1)),
                                       Element(BigInt(81)), 15);
            if (!c15.conditions_ok) return pass_if(false, {{"case", "C15 conditions"}});
            if (!(c15.labelling.labels == fixture("FIX-5-C15-Z682").labelling.labels))
                return pass_if(false, {{"case", "C15 list"}});
            auto c7 = fibonacci_cycle(MagmaSpec::mod_add(29), Element(BigInt(1)),
                                      Element(BigInt(24)), 7);
            if (!(c7.labelling.labels == fixture("FIX-5-C7-Z29").labelling.labels))
                return pass_if(false, {{"case", "C7 list"}});
            auto c6 = fibonacci_cycle(MagmaSpec::abelian({4, 4}),
                                      Element(std::vector<BigInt>{1, 2}),
                                      Element(std::vector<BigInt>{0, 1}), 6);
            if (!verify(c6.labelling, build_family(FamilySpec::cycle(6))).ok || !c6.conditions_ok)
                return pass_if(false, {{"case", "C6 Z4xZ4"}});
            auto c5 = fibonacci_cycle(MagmaSpec::mod_add(11), Element(BigInt(1)),
                                      Element(BigInt(4)), 5);
            if (!verify(c5.labelling, build_family(FamilySpec::cycle(5))).ok)
                return pass_if(false, {{"case", "C5 Z11"}});
            return pass_if(true);
        });

    add("RPT-5.1-delta-ratio", "5.1", "sumgraph delta-report --max-k 10", Expected::Report,
        [](const ClaimOptions&) {
            DeltaRatioReport rep = delta_ratio_report(10);
            json w;
            w["phi"] = rep.phi_50_digits;
            w["reference_limits"] = {{"4k", rep.limit_4k}, {"6k", rep.limit_6k}};
            json progs = json::array();
            for (const auto& prog : rep.progressions) {
                json p;
                p["progression"] = std::to_string(prog.step) + "k+" + std::to_string(prog.residue);
                json rows = json::array();
                for (const auto& row : prog.rows) {
                    json r;
                    r["n"] = row.n;
                    r["delta"] = row.delta.str();
                    if (row.has_ratio) r["ratio"] = row.ratio;
                    rows.push_back(r);
                }
                p["rows"] = rows;
                progs.push_back(p);
            }
            w["progressions"] = progs;
            return std::make_pair(Actual::ReportOnly, w);
        });

    // ---- section 7 ----
    add("OP7-random-cycle", "7", "sumgraph random-cycle --n 9 --seed 1 --prime-bound 100",
        Expected::Pass, [](const ClaimOptions&) {
            RandomCycleResult res = random_cycle_search(9, 1, 100);
            Graph c9 = build_family(FamilySpec::cycle(9));
            for (const auto& hit : res.hits)
                if (!verify(hit.labelling, c9).ok) return pass_if(false);
            json w;
            w["hits"] = static_cast<long>(res.hits.size());
            w["iterations"] = res.iterations;
            if (!res.hits.empty()) {
                w["prime"] = res.hits[0].prime.str();
                w["labelling"] = labelling_to_json(res.hits[0].labelling);
            }
            return pass_if(!res.hits.empty(), w);
        });

    // ---- section 8 ----
    add("T8-C4l-l1-degenerate", "8", "sumgraph construct c4l 1", Expected::Pass,
        [](const ClaimOptions&) {
            try {
                c4l_theorem_labelling(1);
                return pass_if(false);
            } catch (const Error& e) {
                return pass_if(e.code() == "DegenerateGroup");
            }
        });
    for (int l = 2; l <= 6; ++l) {
        add("T8-C4l-l" + std::to_string(l), "8", "sumgraph construct c4l " + std::to_string(l),
            Expected::Report, [l](const ClaimOptions&) {
                Labelling lab = c4l_theorem_labelling(l);
                return report_construction(lab, build_family(FamilySpec::cycle(4 * l)));
            });
    }

    add("P8-vorobiev", "8", "sumgraph claims run --filter P8-vorobiev", Expected::Pass,
        [](const ClaimOptions&) {
            std::mt19937_64 rng(20240809);
            std::uniform_int_distribution<long> idx(-50, 50);
            for (int t = 0; t < 100; ++t) {
                long m = idx(rng), n = idx(rng);
                if (fib(m + n) != fib(m - 1) * fib(n) + fib(m) * fib(n + 1))
                    return pass_if(false, {{"m", m}, {"n", n}});
            }
            return pass_if(true);
        });

    add("P8-consecutive-coprime", "8", "sumgraph claims run --filter P8-consecutive-coprime",
        Expected::Pass, [](const ClaimOptions&) {
            for (long n = 1; n <= 300; ++n)
                if (big_gcd(fib(n), fib(n + 1)) != 1) return pass_if(false, {{"n", n}});
            return pass_if(true);
        });

    // ---- section 9.1 ----
    for (int m = 4; m <= 20; ++m) {
        add("P9.1-matching-harary-m" + std::to_string(m), "9.1",
            "sumgraph construct harary-matching " + std::to_string(m), Expected::Report,
            [m](const ClaimOptions&) {
                Labelling lab = matching_harary_style(m);
                return report_construction(lab, build_family(FamilySpec::matching(m)));
            });
    }

    add("P9.1-li-matching", "9.1", "sumgraph construct li-matching m", Expected::Pass,
        [](const ClaimOptions&) {
            for (int m = 3; m <= 20; ++m) {
                Labelling lab = matching_li(m);
                if (!verify(lab, build_family(FamilySpec::matching(m))).ok)
                    return pass_if(false, {{"m", m}});
                BigInt lo = lab.labels[0].num(), hi = lo;
                for (const auto& e : lab.labels) {
                    lo = std::min(lo, e.num());
                    hi = std::max(hi, e.num());
                }
                BigInt range = hi - lo;
                if (range != 4 * m - 3) return pass_if(false, {{"m", m}, {"range", range.str()}});
            }
            return pass_if(true);
        });

    add("P9.1-empty-radius", "9.1", "sumgraph construct empty-graph n", Expected::Pass,
        [](const ClaimOptions&) {
            for (int n = 1; n <= 50; ++n) {
                Labelling lab = empty_graph(n);
                if (!verify(lab, Graph(n)).ok) return pass_if(false, {{"n", n}});
                BigInt mx = 0;
                for (const auto& e : lab.labels)
                    mx = std::max(mx, e.num() < 0 ? -e.num() : e.num());
                if (mx != (n > 1 ? n - 1 : 0)) return pass_if(false, {{"n", n}, {"radius", mx.str()}});
                if (n >= 2 && n % 2 == 0 && !verify(empty_graph_even_alt(n), Graph(n)).ok)
                    return pass_if(false, {{"n", n}, {"alt", true}});
            }
            return pass_if(true);
        });

    add("P9.1-empty-exact", "9.1", "sumgraph radius --graph nK1 --cap 8", Expected::Pass,
        [](const ClaimOptions&) {
            for (int n = 1; n <= 6; ++n) {
                RadiusResult r = radius(Graph(n), n + 2);
                if (r.above_cap || r.value != n - 1)
                    return pass_if(false, {{"n", n}, {"radius", r.value}});
            }
            return pass_if(true);
        });

    // ---- section 9.2 ----
    add("NEG-9.2-C4-int", "9.2", "sumgraph search --graph C4 --radius 30", Expected::Pass,
        [](const ClaimOptions&) {
            return pass_if(exhausted(build_family(FamilySpec::cycle(4)), DomainKind::IntRadius, 30),
                           {{"bound", 30}});
        });
    add("NEG-9.2-K4-int", "9.2", "sumgraph search --graph K4 --radius 20", Expected::Pass,
        [](const ClaimOptions&) {
            return pass_if(exhausted(build_family(FamilySpec::complete(4)), DomainKind::IntRadius, 20),
                           {{"bound", 20}});
        });
    add("NEG-9.2-petersen-int", "9.2", "sumgraph search --graph petersen --radius 15",
        Expected::Pass, [](const ClaimOptions&) {
            return pass_if(exhausted(build_family(FamilySpec::petersen()), DomainKind::IntRadius, 15),
                           {{"bound", 15}});
        });

    // The computed rows (n >= 4) of the published table follow the zero-free
    // labelling convention; the n = 2, 3 rows hold with 0 allowed (K_2, P_3
    // and K_3 all force a zero label). Each row is re-checked under the
    // convention it was produced with, recorded in the witness.
    struct CountRow {
        int n;
        long t, isg, risg;
        bool zero_free;
    };
    const std::vector<CountRow> table = {{2, 2, 2, 2, false},      {3, 4, 4, 4, false},
                                         {4, 11, 5, 6, true},      {5, 34, 14, 18, true},
                                         {6, 156, 50, 72, true},   {7, 1044, 226, 361, true},
                                         {8, 12346, 1460, 3162, true}};
    for (const auto& row : table) {
        Expected exp = row.n <= 6 ? Expected::Pass : Expected::Report;
        std::string cmd = "sumgraph count --file graphs" + std::to_string(row.n) +
                          ".g6 --radius-cap " + std::to_string(kCorpusRadiusCap) +
                          (row.zero_free ? " --forbid-zero" : "");
        add("TBL9.2-n" + std::to_string(row.n), "9.2", cmd, exp,
            [row](const ClaimOptions& opts) {
                if (opts.corpus_dir.empty())
                    return std::make_pair(Actual::ReportOnly,
                                          json{{"skipped", "no corpus dir supplied"}});
                std::string path =
                    opts.corpus_dir + "/graphs" + std::to_string(row.n) + ".g6";
                if (!std::filesystem::exists(path))
                    return std::make_pair(Actual::ReportOnly, json{{"skipped", "missing " + path}});
                auto graphs = read_graph6_file(path);
                CorpusCount c =
                    count_corpus(graphs, kCorpusRadiusCap, opts.jobs, CountMode::Both, row.zero_free);
                json w = count_row_json(c);
                w["zero_free"] = row.zero_free;
                w["expected"] = {{"t", row.t}, {"isg", row.isg}, {"risg", row.risg}};
                bool ok = c.total == row.t && c.isg == row.isg && c.risg == row.risg;
                if (row.n > 6) return std::make_pair(Actual::ReportOnly, w);
                return std::make_pair(ok ? Actual::Pass : Actual::Fail, w);
            });
    }

    add("TBL9.2-def1-crosscheck", "9.2",
        "sumgraph count --file graphs<n>.g6 --radius-cap 32 (without --forbid-zero)",
        Expected::Report, [](const ClaimOptions& opts) {
            // the same rows under the faithful definition (0 allowed); these
            // EXCEED the published n >= 4 numbers, witnessed by labellings
            // such as the star { 0, 1, 2, 4 }
            json w;
            w["note"] = "published n >= 4 rows follow the zero-free convention; with 0 allowed "
                        "the counts are strictly larger";
            if (opts.corpus_dir.empty())
                return std::make_pair(Actual::ReportOnly, w);
            json rows = json::array();
            for (int n = 4; n <= 6; ++n) {
                std::string path = opts.corpus_dir + "/graphs" + std::to_string(n) + ".g6";
                if (!std::filesystem::exists(path)) continue;
                auto graphs = read_graph6_file(path);
                CorpusCount c = count_corpus(graphs, kCorpusRadiusCap, opts.jobs);
                rows.push_back(count_row_json(c));
            }
            w["def1_rows"] = rows;
            return std::make_pair(Actual::ReportOnly, w);
        });

    // ---- section 9.3 ----
    add("T9.3-kernel", "9.3", "sumgraph kernel --graph Q4 --labelling sol1", Expected::Pass,
        [](const ClaimOptions&) {
            const Fixture& fx = fixture("FIX-9.3-Q4-r46");
            KernelResult kr = labelling_kernel(fx.target, fx.labelling);
            json w;
            w["dim"] = static_cast<long>(kr.basis.size());
            if (kr.basis.size() != 3) return std::make_pair(Actual::Fail, w);
            // coefficients of sol1..sol3 in the documented reference basis
            const auto& ubasis = q4_reference_basis();
            const std::vector<std::vector<long>> expect = {
                {-6, 19, -40}, {32, -5, -14}, {6, 9, -35}};
            const std::vector<std::string> ids = {"FIX-9.3-Q4-r46", "FIX-9.3-Q4-r37",
                                                  "FIX-9.3-Q4-r35"};
            for (size_t s = 0; s < ids.size(); ++s) {
                std::vector<BigInt> v;
                for (const auto& e : fixture(ids[s]).labelling.labels) v.push_back(e.num());
                auto coords = coords_in_basis(ubasis, v);
                if (!coords) return std::make_pair(Actual::Fail, w);
                for (int j = 0; j < 3; ++j)
                    if ((*coords)[j] != expect[s][j])
                        return std::make_pair(Actual::Fail, w);
            }
            return std::make_pair(Actual::Pass, w);
        });

    add("T9.3-primitives", "9.3", "sumgraph primitives --graph Q4 --box 50", Expected::Pass,
        [](const ClaimOptions&) {
            const Fixture& fx = fixture("FIX-9.3-Q4-r46");
            KernelResult kr = labelling_kernel(fx.target, fx.labelling);
            auto prims = enumerate_primitive_labellings(fx.target, kr.basis, 50);
            json w;
            w["count"] = static_cast<long>(prims.size());
            if (prims.size() < 5) return std::make_pair(Actual::Fail, w);
            for (const auto& lab : prims)
                if (!verify(lab, fx.target).ok) return std::make_pair(Actual::Fail, w);
            // sol2 and sol3 must be among the outputs, up to overall sign
            auto contains = [&](const std::string& id) {
                std::vector<BigInt> v;
                for (const auto& e : fixture(id).labelling.labels) v.push_back(e.num());
                for (const auto& lab : prims) {
                    bool eq = true, neg = true;
                    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
                        if (lab.labels[i].num() != v[i]) eq = false;
                        if (lab.labels[i].num() != -v[i]) neg = false;
                    }
                    if (eq || neg) return true;
                }
                return false;
            };
            bool ok = contains("FIX-9.3-Q4-r37") && contains("FIX-9.3-Q4-r35");
            return std::make_pair(ok ? Actual::Pass : Actual::Fail, w);
        });

    // ---- section 9.4: cubic graphs ----
    add("CUBIC-9.4-n4", "9.4", "sumgraph search --graph K4 --radius 20", Expected::Pass,
        [](const ClaimOptions&) {
            return pass_if(exhausted(build_family(FamilySpec::complete(4)), DomainKind::IntRadius, 20),
                           {{"cubic_n", 4}, {"bound", 20}});
        });
    add("CUBIC-9.4-n6", "9.4", "sumgraph search --graph prism --radius 15", Expected::Pass,
        [](const ClaimOptions&) {
            bool a = exhausted(build_family(FamilySpec::prism()), DomainKind::IntRadius, 15);
            bool b = exhausted(build_family(FamilySpec::complete_bipartite(3, 3)),
                               DomainKind::IntRadius, 15);
            return pass_if(a && b, {{"cubic_n", 6}, {"bound", 15}});
        });
    for (int n : {8, 10, 12}) {
        add("CUBIC-9.4-n" + std::to_string(n), "9.4",
            "sumgraph count --file cubic" + std::to_string(n) + ".g6 --radius-cap " +
                std::to_string(kCorpusRadiusCap) + " --forbid-zero",
            Expected::Report, [n](const ClaimOptions& opts) {
                std::string path = opts.corpus_dir + "/cubic" + std::to_string(n) + ".g6";
                if (opts.corpus_dir.empty() || !std::filesystem::exists(path))
                    return std::make_pair(Actual::ReportOnly,
                                          json{{"skipped", "supply " + path + " to run"}});
                auto graphs = read_graph6_file(path);
                CorpusCount c =
                    count_corpus(graphs, kCorpusRadiusCap, opts.jobs, CountMode::Both, true);
                json w = count_row_json(c);
                w["zero_free"] = true;
                return std::make_pair(Actual::ReportOnly, w);
            });
    }

    // ---- section 10 ----
    add("L10-gcd-reduce", "10", "sumgraph claims run --filter L10-gcd-reduce", Expected::Pass,
        [](const ClaimOptions&) {
            std::mt19937_64 rng(7);
            for (int t = 0; t < 100; ++t) {
                long m = 3 + static_cast<long>(rng() % 18);
                int n = 3 + static_cast<int>(rng() % 5);
                Labelling base{MagmaSpec::mod_add(m), {}, true};
                base.labels.emplace_back(BigInt(1));  // forces gcd 1 downstairs
                for (int i = 1; i < n; ++i) base.labels.emplace_back(BigInt(rng() % m));
                Graph target = induced_graph(base);
                long c = 2 + static_cast<long>(rng() % 4);
                Labelling scaled{MagmaSpec::mod_add(m * c), {}, true};
                for (const auto& e : base.labels) scaled.labels.emplace_back(e.num() * c);
                if (!verify(scaled, target).ok) return pass_if(false, {{"t", t}});
                Labelling reduced = gcd_reduce_mod_labelling(scaled);
                if (!(reduced.spec.modulus == m)) return pass_if(false, {{"t", t}});
                if (!verify(reduced, target).ok) return pass_if(false, {{"t", t}});
            }
            // non-dividing gcd raises
            Labelling bad{MagmaSpec::mod_add(15), {}, false};
            for (long v : {2, 4, 8}) bad.labels.emplace_back(BigInt(v));
            try {
                gcd_reduce_mod_labelling(bad);
                return pass_if(false, {{"case", "gcd 2 mod 15 should throw"}});
            } catch (const Error& e) {
                if (e.code() != "GcdDoesNotDivideModulus") throw;
            }
            return pass_if(true);
        });

    add("T10-bound-table", "10", "sumgraph mod-sweep --graph <g> (bound column)", Expected::Pass,
        [](const ClaimOptions&) {
            json rows = json::array();
            for (int n = 3; n <= 12; ++n) {
                Graph g(n);
                ModSweepResult r = mod_sum_sweep(g, 2);
                BigInt want = 2;
                for (int i = 1; i < n; ++i) want *= 3;
                rows.push_back({{"n", n}, {"N", r.conclusive_bound.str()}});
                if (r.conclusive_bound != want) return pass_if(false, rows);
            }
            return pass_if(true, rows);
        });

    add("OP10-cube-sweep", "10", "sumgraph mod-sweep --graph Q3 --cap 20", Expected::Pass,
        [](const ClaimOptions&) {
            ModSweepResult r = mod_sum_sweep(build_family(FamilySpec::hypercube(3)), 20);
            json w;
            w["found"] = r.found;
            w["m"] = r.modulus;
            if (!r.found || r.modulus > 15) return std::make_pair(Actual::Fail, w);
            bool ok = verify(*r.witness, build_family(FamilySpec::hypercube(3))).ok;
            w["witness"] = labelling_to_json(*r.witness);
            return pass_if(ok, w);
        });

    add("OP10-petersen-sweep", "10", "sumgraph mod-sweep --graph petersen --cap 28",
        Expected::Pass, [](const ClaimOptions&) {
            ModSweepResult r = mod_sum_sweep(build_family(FamilySpec::petersen()), 28);
            json w;
            w["found"] = r.found;
            w["m"] = r.modulus;
            if (!r.found) return std::make_pair(Actual::Fail, w);
            bool ok = verify(*r.witness, build_family(FamilySpec::petersen())).ok;
            return pass_if(ok, w);
        });

    add("NEG-10-K33-mod", "10", "sumgraph mod-sweep --graph K3,3 --cap 30", Expected::Pass,
        [](const ClaimOptions&) {
            ModSweepResult r = mod_sum_sweep(build_family(FamilySpec::complete_bipartite(3, 3)), 30);
            return pass_if(!r.found, {{"cap", 30}});
        });
    add("NEG-10-prism-mod", "10", "sumgraph mod-sweep --graph prism --cap 30", Expected::Pass,
        [](const ClaimOptions&) {
            ModSweepResult r = mod_sum_sweep(build_family(FamilySpec::prism()), 30);
            return pass_if(!r.found, {{"cap", 30}});
        });

    // ---- section 11 ----
    add("NEG-11-prism-relaxed-mod", "11", "sumgraph search --graph prism --mod m --relaxed",
        Expected::Pass, [](const ClaimOptions&) {
            Graph prism = build_family(FamilySpec::prism());
            for (long m = 2; m <= 20; ++m) {
                SearchProblem p{prism, DomainKind::Mod, m, {}, true, false};
                if (solve(p).found) return pass_if(false, {{"m", m}});
            }
            return pass_if(true, {{"cap", 20}});
        });

    add("CUBIC-11-relaxed-n4", "11", "sumgraph search --graph K4 --radius 4 --relaxed",
        Expected::Report, [](const ClaimOptions&) {
            Graph k4 = build_family(FamilySpec::complete(4));
            SearchProblem def1{k4, DomainKind::IntRadius, 4, {}, true, false, false};
            SearchProblem zf{k4, DomainKind::IntRadius, 20, {}, true, false, true};
            SearchOutcome a = solve(def1), b = solve(zf);
            json w;
            w["relaxed_isg_def1"] = a.found;    // zero labelling
            w["relaxed_isg_zero_free_r20"] = b.found;
            w["paper_states"] = "no cubic graph on 4 vertices is a relaxed integral sum graph";
            w["note"] = "true under the zero-free convention of the published tables; the zero "
                        "labelling of K_4 labels it under the definition itself";
            if (a.found) w["witness"] = labelling_to_json(*a.witness);
            return std::make_pair(Actual::ReportOnly, w);
        });

    add("CUBIC-11-relaxed-n6", "11", "sumgraph search --graph prism --radius 15 --relaxed",
        Expected::Report, [](const ClaimOptions&) {
            json w;
            for (const char* name : {"prism", "K3,3"}) {
                Graph g = build_family(parse_family_spec(name));
                SearchProblem def1{g, DomainKind::IntRadius, 15, {}, true, false, false};
                SearchProblem zf{g, DomainKind::IntRadius, 15, {}, true, false, true};
                w[std::string(name) + "_relaxed_def1_r15"] = solve(def1).found;
                w[std::string(name) + "_relaxed_zero_free_r15"] = solve(zf).found;
            }
            return std::make_pair(Actual::ReportOnly, w);
        });

    // ---- section 12 ----
    add("L12-flatten", "12", "sumgraph product (flatten property)", Expected::Pass,
        [](const ClaimOptions&) {
            std::mt19937_64 rng(99);
            for (int t = 0; t < 1000; ++t) {
                int k = 1 + static_cast<int>(rng() % 3);
                long c = 1 + static_cast<long>(rng() % 40);
                FlattenSpec spec(k, BigInt(2 * c + 1));
                auto rnd_tuple = [&]() {
                    std::vector<BigInt> v;
                    for (int i = 0; i < k; ++i)
                        v.emplace_back(static_cast<long>(rng() % (2 * c + 1)) - c);
                    return v;
                };
                std::vector<BigInt> a = rnd_tuple(), b = rnd_tuple();
                auto fa = flatten({a}, spec)[0];
                auto fb = flatten({b}, spec)[0];
                if ((a == b) != (fa == fb)) return pass_if(false, {{"t", t}});
                bool sums_in_bound = true;
                std::vector<BigInt> s(k);
                for (int i = 0; i < k; ++i) {
                    s[i] = a[i] + b[i];
                    if (2 * (s[i] < 0 ? -s[i] : s[i]) >= spec.base) sums_in_bound = false;
                }
                if (sums_in_bound && flatten({s}, spec)[0] != fa + fb)
                    return pass_if(false, {{"t", t}, {"case", "additivity"}});
            }
            return pass_if(true);
        });

    add("T12-product", "12", "sumgraph product g6A g6B --labelsA ... --labelsB ...",
        Expected::Pass, [](const ClaimOptions&) {
            // strong labellings found by search over all graphs on <= 5 vertices
            std::vector<std::pair<Graph, Labelling>> strong;
            for (int n = 1; n <= 5 && strong.size() < 8; ++n) {
                for (const auto& g : enumerate_nonisomorphic(n)) {
                    SearchProblem p{g, DomainKind::IntRadius, 12, {}, false, true};
                    SearchOutcome out = solve(p);
                    if (out.found) {
                        strong.emplace_back(g, *out.witness);
                        if (strong.size() >= 8) break;
                    }
                }
            }
            json w;
            w["strong_labellings"] = static_cast<long>(strong.size());
            long pairs = 0;
            for (const auto& [g, lg] : strong)
                for (const auto& [h, lh] : strong) {
                    Labelling prod = product_labelling(g, lg, h, lh);
                    Graph target = direct_product(g, h);
                    if (!verify(prod, target).ok || !is_strong(prod)) {
                        w["failed_pair"] = {{"g", emit_graph6(g)}, {"h", emit_graph6(h)}};
                        return std::make_pair(Actual::Fail, w);
                    }
                    ++pairs;
                }
            w["pairs_checked"] = pairs;
            return pass_if(pairs >= 10, w);
        });

    add("R12-weichsel", "12", "sumgraph product (connectivity sweep)", Expected::Pass,
        [](const ClaimOptions&) {
            // nontrivial connected factors (the theorem's scope)
            std::vector<Graph> connected;
            for (int n = 2; n <= 5; ++n)
                for (const auto& g : enumerate_nonisomorphic(n))
                    if (is_connected(g)) connected.push_back(g);
            long pairs = 0;
            for (const auto& g : connected)
                for (const auto& h : connected) {
                    Graph p = direct_product(g, h);
                    bool want = has_odd_cycle(g) || has_odd_cycle(h);
                    if (is_connected(p) != want)
                        return pass_if(false, {{"g", emit_graph6(g)}, {"h", emit_graph6(h)}});
                    ++pairs;
                }
            return pass_if(true, {{"pairs", pairs}});
        });

    std::sort(ledger.begin(), ledger.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return ledger;
}

}  // namespace

std::vector<ClaimRecord> run_claims(const ClaimOptions& opts) {
    std::vector<ClaimRecord> out;
    bool matched = false;
    for (const auto& claim : build_ledger()) {
        if (!opts.filter.empty() && claim.id.find(opts.filter) == std::string::npos) continue;
        matched = true;
        ClaimRecord rec;
        rec.id = claim.id;
        rec.section = claim.section;
        rec.command = claim.command;
        rec.expected = claim.expected;
        try {
            auto [actual, witness] = claim.run(opts);
            rec.actual = actual;
            rec.witness = std::move(witness);
            if (rec.witness.is_object() && rec.witness.contains("verdict"))
                rec.detail = rec.witness["verdict"].is_string()
                                 ? rec.witness["verdict"].get<std::string>()
                                 : "";
        } catch (const std::exception& e) {
            rec.actual = ClaimRecord::Actual::Fail;
            rec.detail = e.what();
        }
        out.push_back(std::move(rec));
    }
    if (!opts.filter.empty() && !matched)
        throw Error("UnknownClaimId", "no claim matches '" + opts.filter + "'");
    return out;
}

std::vector<std::pair<std::string, std::string>> claim_index() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : build_ledger()) out.emplace_back(c.id, c.section);
    return out;
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const auto& c : build_ledger()) out.push_back(c.id);
    return out;
}

int claims_exit_code(const std::vector<ClaimRecord>& records) {
    for (const auto& r : records)
        if (r.gating_failure()) return 1;
    return 0;
}

std::string render_claim_table(const std::vector<ClaimRecord>& records) {
    std::ostringstream out;
    size_t width = 8;
    for (const auto& r : records) width = std::max(width, r.id.size());
    int pass = 0, fail = 0, report = 0;
    for (const auto& r : records) {
        const char* actual = r.actual == Actual::Pass ? "PASS"
                             : r.actual == Actual::Fail ? "FAIL"
                                                        : "REPORT-ONLY";
        if (r.actual == Actual::Pass) ++pass;
        else if (r.actual == Actual::Fail) ++fail;
        else ++report;
        out << r.id << std::string(width - r.id.size() + 2, ' ') << actual;
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
    }
    out << "claims: " << pass << " pass, " << fail << " fail, " << report << " report-only\n";
    return out.str();
}

}  // namespace sumgraph
