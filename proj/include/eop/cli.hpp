#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eop/audit.hpp"
#include "eop/coloring.hpp"
#include "eop/conditions.hpp"
#include "eop/corpus.hpp"
#include "eop/families.hpp"
#include "eop/scan.hpp"
#include "eop/solver.hpp"

namespace eop {

// Exit codes: 0 clean, 1 usage or input errors, 2 counterexamples found.

namespace climpl {

inline const char* class_tag(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::m: return "rho_m";
        case ExtremalClass::m_minus_1: return "rho_m1";
        case ExtremalClass::m_minus_2: return "rho_m2";
        case ExtremalClass::m_minus_3: return "rho_m3";
        case ExtremalClass::none: return "none";
    }
    return "?";
}

inline std::string shape_string(const StarDecomposition& dec) {
    std::string s;
    for (size_t i = 0; i < dec.shape.size(); ++i) {
        if (i) s += "+";
        s += "K_{1," + std::to_string(dec.shape[i]) + "}";
    }
    return s.empty() ? "empty" : s;
}

inline std::string family_match_string(const FamilyMatch& fm) {
    const FamilyInfo& info = family_info(fm.id);
    std::string s = std::string(info.name) + "(";
    for (int i = 0; i < info.arity; ++i) {
        if (i) s += ",";
        s += std::string(info.param_names[i]) + "=" + std::to_string(fm.params[i]);
    }
    return s + ")";
}

// Input graphs for the per-graph subcommands: graph6 records from a file or
// stdin, or a single edge-list graph with --format edges.
inline std::vector<Graph> read_inputs(const std::string& file, const std::string& format,
                                      std::istream& in) {
    if (format == "edges") {
        std::string text;
        if (file.empty() || file == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(file);
            if (!f) throw std::invalid_argument("cannot open input file: " + file);
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        return {parse_edge_list(text)};
    }
    std::vector<Graph> graphs =
        (file.empty() || file == "-") ? load_graph6_stream(in) : load_graph6_file(file);
    if (graphs.empty()) throw std::invalid_argument("no input graphs");
    return graphs;
}

inline int cmd_rho(const std::string& file, const std::string& format, std::istream& in,
                   std::ostream& out) {
    for (const Graph& g : read_inputs(file, format, in)) {
        const EopNumber exact = eop_number_exact(g);
        const bool connected = is_connected(g);
        const std::string witness = detail::edge_names(g, exact.witness);
        const std::string shape =
            g.edge_count() > 0 ? shape_string(star_decomposition(g, exact.witness)) : "empty";
        if (format == "records") {
            out << "graph=" << write_graph6(canonical_graph(g)) << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << " rho=" << exact.rho << " witness=" << witness
                << " shape=" << shape
                << (connected ? "" : " note=disconnected;component-sum") << "\n";
        } else {
            out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " rho=" << exact.rho
                << "\n";
            out << "witness: " << witness << "\n";
            out << "shape: " << shape << "\n";
            if (!connected)
                out << "note: disconnected input; rho is the sum over components (no common "
                       "edge crosses components)\n";
        }
    }
    return 0;
}

inline int cmd_conditions(const std::string& file, const std::string& format, int t,
                          std::istream& in, std::ostream& out) {
    for (const Graph& g : read_inputs(file, format, in)) {
        const ConditionReport rep = check_conditions(g, t);
        const std::string range = "[2," + std::to_string(t) + "]";
        if (format == "records") {
            auto flag = [](bool holds, bool vacuous) {
                return std::string(holds ? "pass" : "fail") + (vacuous ? "(vacuous)" : "");
            };
            out << "graph=" << write_graph6(canonical_graph(g)) << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << " t=" << t << " c1=" << flag(rep.c1.holds, false)
                << " c2=" << flag(rep.c2.holds, false)
                << " c3=" << flag(rep.c3.holds, rep.c3.vacuous)
                << " c4=" << flag(rep.c4.holds, rep.c4.vacuous)
                << " window=" << (rep.window() ? "rho-in-" + range : "not-implied") << "\n";
            continue;
        }
        out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " t=" << t << "\n";
        out << "C1 " << (rep.c1.holds ? "holds" : "fails") << " (diam=" << rep.c1.diam << ")\n";
        if (rep.c2.holds) {
            out << "C2 holds\n";
        } else {
            out << "C2 fails (induced K_{1," << t + 1 << "} centre=" << rep.c2.star->centre
                << " leaves=";
            const InducedStarWitness& w = *rep.c2.star;
            for (size_t i = 0; i < w.leaves.size(); ++i)
                out << (i ? "," : "") << w.leaves[i];
            out << ")\n";
        }
        if (rep.c3.holds) {
            out << "C3 holds" << (rep.c3.vacuous ? " (vacuous)" : "") << "\n";
        } else {
            out << "C3 fails (matching=" << detail::edge_names(g, rep.c3.matching)
                << " z=" << rep.c3.z << ")\n";
        }
        if (rep.c4.holds) {
            out << "C4 holds" << (rep.c4.vacuous ? " (vacuous)" : "") << "\n";
        } else {
            out << "C4 fails (eop=" << detail::edge_names(g, rep.c4.eop_set)
                << " centre=" << rep.c4.centre << " z=" << rep.c4.z << ")\n";
        }
        out << "window: "
            << (rep.window() ? "2 <= rho <= " + std::to_string(t) : "not implied") << "\n";
    }
    return 0;
}

inline int cmd_classify(const std::string& file, const std::string& format, std::istream& in,
                        std::ostream& out) {
    for (const Graph& g : read_inputs(file, format, in)) {
        const ExtremalClass cls = predict_extremal_class(g);
        const std::vector<FamilyMatch> matches = recognize_families(g);
        std::string fams;
        for (size_t i = 0; i < matches.size(); ++i) {
            if (i) fams += ",";
            fams += family_match_string(matches[i]);
        }
        if (fams.empty()) fams = "none";
        if (format == "records") {
            out << "graph=" << write_graph6(canonical_graph(g)) << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << " class=" << class_tag(cls) << " families=" << fams
                << "\n";
        } else {
            out << "n=" << g.vertex_count() << " m=" << g.edge_count()
                << " class=" << class_tag(cls) << "\n";
            out << "families: " << fams << "\n";
        }
    }
    return 0;
}

inline int cmd_generate(const std::string& name, const std::vector<std::string>& assignments,
                        std::ostream& out) {
    const FamilyId id = family_from_string(name);
    const FamilyInfo& info = family_info(id);
    std::vector<int> params(info.arity);
    std::vector<bool> seen(info.arity, false);
    for (const std::string& a : assignments) {
        const size_t eq = a.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected name=value, got \"" + a + "\"");
        const std::string key = a.substr(0, eq);
        int slot = -1;
        for (int i = 0; i < info.arity; ++i)
            if (key == info.param_names[i]) slot = i;
        if (slot < 0)
            throw std::invalid_argument(std::string(info.name) + " has no parameter \"" + key +
                                        "\"");
        if (seen[slot])
            throw std::invalid_argument("duplicate parameter \"" + key + "\"");
        const std::string value = a.substr(eq + 1);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(value, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad value for \"" + key + "\": " + value);
        }
        if (used != value.size())
            throw std::invalid_argument("bad value for \"" + key + "\": " + value);
        params[slot] = v;
        seen[slot] = true;
    }
    for (int i = 0; i < info.arity; ++i)
        if (!seen[i])
            throw std::invalid_argument(std::string(info.name) + " needs parameter " +
                                        info.param_names[i]);
    out << write_graph6(generate_family(id, params)) << "\n";
    return 0;
}

inline int cmd_scan(int max_n, const std::string& corpus_file, const std::string& theorem_list,
                    int jobs, const std::string& format, std::ostream& out, std::ostream& err) {
    const std::vector<Graph> corpus =
        corpus_file.empty() ? built_in_corpus(max_n) : load_graph6_file(corpus_file);
    const std::vector<TheoremSel> theorems =
        theorem_list.empty() ? default_theorems() : parse_theorems(theorem_list);
    const ScanResult result = run_scan(corpus, theorems, jobs);
    for (const ScanRecord& rec : result.records)
        if (format == "records" || rec.verdict != "match") out << rec.line() << "\n";
    for (const std::string& line : result.summary.lines()) out << line << "\n";
    char wall[64];
    std::snprintf(wall, sizeof wall, "# wall-clock %.3fs", result.summary.wall_seconds);
    err << wall << "\n";
    return result.summary.mismatch_total() > 0 ? 2 : 0;
}

inline void print_audit_report(const AuditReport& rep, std::ostream& out) {
    out << to_string(rep.id) << ": " << family_info(rep.id).summary
        << (rep.ambiguous ? " [ambiguous]" : "") << "\n";
    for (const AuditCandidate& cand : rep.candidates) {
        out << "  " << (cand.shipped ? "shipped" : "candidate") << " \"" << cand.description
            << "\": " << cand.passes << "/" << cand.total << " pass";
        if (!cand.coincides_with.empty()) {
            out << "; coincides with ";
            for (size_t i = 0; i < cand.coincides_with.size(); ++i)
                out << (i ? "," : "") << to_string(cand.coincides_with[i]);
        }
        out << "\n";
        for (const std::string& f : cand.failures) out << "    fail " << f << "\n";
    }
}

inline int cmd_audit(const std::string& family, int max_param, int max_n, std::ostream& out) {
    if (!family.empty()) {
        const AuditReport rep = audit_family(family_from_string(family), max_param);
        print_audit_report(rep, out);
        return rep.shipped_clean() ? 0 : 2;
    }
    bool dirty = false;
    for (const AuditReport& rep : audit_ambiguous_families(max_param)) {
        print_audit_report(rep, out);
        if (!rep.shipped_clean()) dirty = true;
    }
    const GapReport gaps = audit_corpus_gaps(max_n);
    out << "corpus completeness (n <= " << gaps.max_n << ", m >= 4): " << gaps.records.size()
        << " graph(s) with rho = m-3 outside the listed families\n";
    for (const GapRecord& rec : gaps.records) {
        out << "graph=" << rec.graph << " n=" << rec.n << " m=" << rec.m << " rho=" << rec.rho
            << " theorem=m3 predicted=rho!=m-3 verdict=mismatch witness=unlisted-construction\n";
        for (const std::string& hit : rec.candidate_hits)
            out << "  generated by " << hit << "\n";
        if (!rec.structure.empty()) out << "  structure: " << rec.structure << "\n";
    }
    if (!gaps.records.empty()) dirty = true;
    return dirty ? 2 : 0;
}

inline int cmd_chi_inj(const std::string& file, const std::string& format, int guard_m,
                       std::istream& in, std::ostream& out) {
    for (const Graph& g : read_inputs(file, format, in)) {
        if (!is_connected(g)) throw std::invalid_argument("chi-inj requires connected input");
        const EdgeColoring col = injective_chromatic_index(g, guard_m);
        std::string coloring;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e) coloring += ",";
            coloring += std::to_string(g.edges()[e].u) + "-" + std::to_string(g.edges()[e].v) +
                        ":" + std::to_string(col.colors[e]);
        }
        if (format == "records") {
            out << "graph=" << write_graph6(canonical_graph(g)) << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << " chi-inj=" << col.chi << " coloring=" << coloring
                << "\n";
        } else {
            out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " chi-inj=" << col.chi
                << "\n";
            out << "coloring: " << coloring << "\n";
        }
    }
    return 0;
}

}  // namespace climpl

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact toolkit for the edge open packing number"};
    app.require_subcommand(1);

    std::string file, format = "text";
    int t = 2, max_n = 7, jobs = 1, max_param = 4, guard_m = 24;
    std::string corpus_file, theorem_list, family;
    std::vector<std::string> assignments;

    auto add_input_opts = [&](CLI::App* sub, bool allow_edges) {
        sub->add_option("file", file, "input file (graph6 lines; '-' or absent reads stdin)");
        sub->add_option("--format", format,
                        allow_edges ? "text | records | edges" : "text | records")
            ->check(CLI::IsMember(allow_edges
                                      ? std::vector<std::string>{"text", "records", "edges"}
                                      : std::vector<std::string>{"text", "records"}));
    };

    CLI::App* rho = app.add_subcommand("rho", "exact edge open packing number");
    add_input_opts(rho, true);

    CLI::App* conditions = app.add_subcommand("conditions", "window conditions C1-C4 at t");
    add_input_opts(conditions, true);
    conditions->add_option("--t", t, "window parameter t >= 2")->required();

    CLI::App* classify = app.add_subcommand("classify", "extremal class and family matches");
    add_input_opts(classify, true);

    CLI::App* generate = app.add_subcommand("generate", "construct a family member");
    generate->add_option("family", family, "family name, e.g. R1")->required();
    generate->add_option("params", assignments, "named parameters, e.g. s=4");

    CLI::App* scan = app.add_subcommand("scan", "theorem scan over a corpus");
    scan->add_option("--max-n", max_n, "built-in corpus bound (3..7)");
    scan->add_option("--corpus", corpus_file, "graph6 corpus file instead of built-in");
    scan->add_option("--theorems", theorem_list,
                     "comma list: t-window(T),rho2,m1,m2,m3,invariants");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--format", format, "records (all) | text (non-matches only)")
        ->check(CLI::IsMember(std::vector<std::string>{"text", "records"}));

    CLI::App* audit = app.add_subcommand("audit", "family construction audits");
    audit->add_option("family", family, "audit one family (default: all ambiguous + gaps)");
    audit->add_option("--max-param", max_param, "parameter box bound");
    audit->add_option("--max-n", max_n, "corpus bound for the gap sweep");

    CLI::App* chi = app.add_subcommand("chi-inj", "injective chromatic index");
    add_input_opts(chi, true);
    chi->add_option("--guard-m", guard_m, "edge-count guard for the coloring search");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::ostringstream buf;
        if (e.get_exit_code() == 0) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 1;
        }
        app.exit(e, buf, buf);
        err << buf.str();
        return 1;
    }

    try {
        if (rho->parsed()) return climpl::cmd_rho(file, format, in, out);
        if (conditions->parsed()) return climpl::cmd_conditions(file, format, t, in, out);
        if (classify->parsed()) return climpl::cmd_classify(file, format, in, out);
        if (generate->parsed()) return climpl::cmd_generate(family, assignments, out);
        if (scan->parsed())
            return climpl::cmd_scan(max_n, corpus_file, theorem_list, jobs, format, out, err);
        if (audit->parsed()) return climpl::cmd_audit(family, max_param, max_n, out);
        if (chi->parsed()) return climpl::cmd_chi_inj(file, format, guard_m, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace eop
