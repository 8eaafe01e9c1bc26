#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eop/audit.hpp"
#include "eop/conditions.hpp"
#include "eop/families.hpp"
#include "eop/graph6.hpp"
#include "eop/packing.hpp"
#include "eop/solver.hpp"

namespace eop {

// Theorem scans: evaluate predictions against the exact solver per graph and
// emit line records plus an aggregate summary.  Output is deterministic for a
// fixed corpus and theorem list regardless of the worker count.

enum class TheoremKind { t_window, rho2, m1, m2, m3, invariants };

struct TheoremSel {
    TheoremKind kind = TheoremKind::invariants;
    int t = 0;  // t_window only

    std::string name() const {
        switch (kind) {
            case TheoremKind::t_window: return "t-window(" + std::to_string(t) + ")";
            case TheoremKind::rho2: return "rho2";
            case TheoremKind::m1: return "m1";
            case TheoremKind::m2: return "m2";
            case TheoremKind::m3: return "m3";
            case TheoremKind::invariants: return "invariants";
        }
        return "?";
    }
};

inline std::vector<TheoremSel> default_theorems() {
    std::vector<TheoremSel> sels;
    for (int t = 2; t <= 5; ++t) sels.push_back({TheoremKind::t_window, t});
    sels.push_back({TheoremKind::rho2, 0});
    sels.push_back({TheoremKind::m1, 0});
    sels.push_back({TheoremKind::m2, 0});
    sels.push_back({TheoremKind::m3, 0});
    sels.push_back({TheoremKind::invariants, 0});
    return sels;
}

// Comma-separated names: "t-window(3),rho2,m1,m2,m3,invariants".
inline std::vector<TheoremSel> parse_theorems(const std::string& list) {
    std::vector<TheoremSel> sels;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string item = list.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? list.size() + 1 : comma + 1;
        if (item.empty()) continue;
        if (item == "rho2") {
            sels.push_back({TheoremKind::rho2, 0});
        } else if (item == "m1") {
            sels.push_back({TheoremKind::m1, 0});
        } else if (item == "m2") {
            sels.push_back({TheoremKind::m2, 0});
        } else if (item == "m3") {
            sels.push_back({TheoremKind::m3, 0});
        } else if (item == "invariants") {
            sels.push_back({TheoremKind::invariants, 0});
        } else if (item.rfind("t-window(", 0) == 0 && item.back() == ')') {
            const std::string num = item.substr(9, item.size() - 10);
            size_t used = 0;
            int t = 0;
            try {
                t = std::stoi(num, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad theorem: " + item);
            }
            if (used != num.size() || t < 2) throw std::invalid_argument("bad theorem: " + item);
            sels.push_back({TheoremKind::t_window, t});
        } else {
            throw std::invalid_argument("unknown theorem: " + item);
        }
    }
    if (sels.empty()) throw std::invalid_argument("empty theorem list");
    return sels;
}

struct ScanRecord {
    std::string graph;  // canonical graph6
    int n = 0;
    int m = 0;
    int rho = 0;
    std::string theorem;
    std::string predicted;
    std::string verdict;  // match | mismatch | skipped(reason)
    std::string witness;  // mismatches only

    std::string line() const {
        std::string s = "graph=" + graph + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " rho=" + std::to_string(rho) + " theorem=" + theorem +
                        " predicted=" + predicted + " verdict=" + verdict;
        if (!witness.empty()) s += " witness=" + witness;
        return s;
    }
};

struct ScanSummary {
    int corpus_size = 0;
    // value buckets by rho vs m: rho=m, m-1, m-2, m-3, other
    std::array<int, 5> class_counts{};
    std::vector<std::pair<std::string, int>> mismatches;  // per theorem, in request order
    std::vector<std::pair<std::string, std::pair<int, int>>> vacuous;  // (c3, c4) per t-window
    double wall_seconds = 0.0;

    int mismatch_total() const {
        int total = 0;
        for (const auto& [name, count] : mismatches) total += count;
        return total;
    }

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        out.push_back("# corpus-size=" + std::to_string(corpus_size));
        out.push_back("# class-counts m=" + std::to_string(class_counts[0]) +
                      " m-1=" + std::to_string(class_counts[1]) +
                      " m-2=" + std::to_string(class_counts[2]) +
                      " m-3=" + std::to_string(class_counts[3]) +
                      " other=" + std::to_string(class_counts[4]));
        std::string mm = "# mismatches";
        for (const auto& [name, count] : mismatches)
            mm += " " + name + "=" + std::to_string(count);
        out.push_back(mm);
        std::string vac = "# vacuous";
        if (vacuous.empty()) {
            vac += " none";
        } else {
            for (const auto& [name, counts] : vacuous)
                vac += " " + name + ":c3=" + std::to_string(counts.first) +
                       ",c4=" + std::to_string(counts.second);
        }
        out.push_back(vac);
        return out;
    }
};

struct ScanResult {
    std::vector<ScanRecord> records;  // canonical graph order, theorems in request order
    ScanSummary summary;
};

namespace detail {

inline std::string dashed(std::string s) {
    for (char& c : s)
        if (c == ' ') c = '-';
    return s;
}

inline std::string edge_names(const Graph& g, const std::vector<int>& edge_ids) {
    std::string s;
    for (size_t i = 0; i < edge_ids.size(); ++i) {
        const Edge& e = g.edges()[edge_ids[i]];
        if (i) s += ",";
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s.empty() ? "none" : s;
}

inline const std::vector<std::pair<std::string, std::vector<uint8_t>>>& complement_shapes() {
    static const std::vector<std::pair<std::string, std::vector<uint8_t>>> shapes = [] {
        std::vector<std::pair<std::string, std::vector<uint8_t>>> out;
        out.emplace_back("K_{1,3}", canonical_form(star_graph(3)).cert);
        out.emplace_back("P3+K2",
                         canonical_form(Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}})).cert);
        out.emplace_back("P4", canonical_form(path_graph(4)).cert);
        out.emplace_back("C3", canonical_form(cycle_graph(3)).cert);
        out.emplace_back("3K2",
                         canonical_form(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}})).cert);
        return out;
    }();
    return shapes;
}

// Edge-induced subgraph on the complement of D, relabeled to 0..k-1.
inline Graph complement_subgraph(const Graph& g, const std::vector<int>& d) {
    std::vector<char> in_d(g.edge_count(), 0);
    for (int e : d) in_d[e] = 1;
    std::vector<int> label(g.vertex_count(), -1);
    int next = 0;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_d[e]) continue;
        const Edge& ed = g.edges()[e];
        for (int v : {ed.u, ed.v})
            if (label[v] < 0) label[v] = next++;
        edges.emplace_back(label[ed.u], label[ed.v]);
    }
    return Graph::from_edges(next, std::move(edges));
}

inline std::string classify_complement_shape(const Graph& g, const std::vector<int>& d) {
    const std::vector<uint8_t> cert = canonical_form(complement_subgraph(g, d)).cert;
    for (const auto& [name, shape_cert] : complement_shapes())
        if (cert == shape_cert) return name;
    return {};
}

struct GraphEval {
    std::string g6;
    int n = 0;
    int m = 0;
    int rho = 0;
    int bucket = 4;  // index into ScanSummary::class_counts
    std::vector<ScanRecord> records;
    std::vector<std::pair<int, int>> vacuous;  // aligned with t-window theorems
};

inline std::string first_failing_condition(const ConditionReport& rep) {
    if (!rep.c1.holds) return "c1-fails;diam=" + std::to_string(rep.c1.diam);
    if (!rep.c2.holds)
        return "c2-fails;centre=" + std::to_string(rep.c2.star ? rep.c2.star->centre : -1);
    if (!rep.c3.holds) return "c3-fails;z=" + std::to_string(rep.c3.z);
    if (!rep.c4.holds)
        return "c4-fails;centre=" + std::to_string(rep.c4.centre) +
               ";z=" + std::to_string(rep.c4.z);
    return "all-conditions-hold";
}

inline void eval_graph(const Graph& g, const std::vector<TheoremSel>& theorems, GraphEval& out) {
    out.g6 = write_graph6(canonical_graph(g));
    out.n = g.vertex_count();
    out.m = g.edge_count();
    const bool connected = is_connected(g);

    std::string skip;
    if (!connected)
        skip = "skipped(disconnected)";
    else if (out.m == 0)
        skip = "skipped(no-edges)";

    const Graph conflicts = conflict_graph(g);
    const EopNumber exact = eop_number_exact(g, &conflicts);
    out.rho = exact.rho;

    if (out.rho == out.m)
        out.bucket = 0;
    else if (out.rho == out.m - 1)
        out.bucket = 1;
    else if (out.rho == out.m - 2)
        out.bucket = 2;
    else if (out.rho == out.m - 3)
        out.bucket = 3;
    else
        out.bucket = 4;

    std::vector<FamilyMatch> matches;
    bool matches_ready = false;
    auto family_letter_present = [&](char letter) {
        if (!matches_ready && skip.empty()) {
            matches = recognize_families(g);
            matches_ready = true;
        }
        for (const FamilyMatch& fm : matches)
            if (family_letter(fm.id) == letter) return true;
        return false;
    };

    for (const TheoremSel& sel : theorems) {
        ScanRecord rec;
        rec.graph = out.g6;
        rec.n = out.n;
        rec.m = out.m;
        rec.rho = out.rho;
        rec.theorem = sel.name();
        if (!skip.empty()) {
            rec.predicted = "n/a";
            rec.verdict = skip;
            out.records.push_back(std::move(rec));
            if (sel.kind == TheoremKind::t_window) out.vacuous.emplace_back(0, 0);
            continue;
        }
        switch (sel.kind) {
            case TheoremKind::t_window: {
                const ConditionReport rep = check_conditions(g, sel.t, &conflicts);
                const bool window = rep.window();
                const bool in_window = 2 <= out.rho && out.rho <= sel.t;
                const std::string range = "[2," + std::to_string(sel.t) + "]";
                rec.predicted = window ? "rho-in-" + range : "rho-outside-" + range;
                rec.verdict = window == in_window ? "match" : "mismatch";
                if (window != in_window)
                    rec.witness = "rho=" + std::to_string(out.rho) + ";" +
                                  first_failing_condition(rep);
                out.vacuous.emplace_back(rep.c3.vacuous ? 1 : 0, rep.c4.vacuous ? 1 : 0);
                break;
            }
            case TheoremKind::rho2: {
                const Rho2Verdict v = check_rho2(g);
                rec.predicted = v.holds ? "rho=2" : "rho!=2";
                rec.verdict = v.holds == (out.rho == 2) ? "match" : "mismatch";
                if (rec.verdict == "mismatch")
                    rec.witness = "rho=" + std::to_string(out.rho) +
                                  (v.reason.empty() ? std::string(";conditions-hold")
                                                    : ";" + dashed(v.reason));
                break;
            }
            case TheoremKind::m1: {
                const bool structural = is_once_subdivided_star(g);
                rec.predicted = structural ? "rho=m-1" : "rho!=m-1";
                rec.verdict = structural == (out.rho == out.m - 1) ? "match" : "mismatch";
                if (rec.verdict == "mismatch")
                    rec.witness = "rho=" + std::to_string(out.rho) +
                                  ";once-subdivided-star=" + (structural ? "yes" : "no");
                break;
            }
            case TheoremKind::m2: {
                const bool structural = family_letter_present('A');
                rec.predicted = structural ? "rho=m-2" : "rho!=m-2";
                rec.verdict = structural == (out.rho == out.m - 2) ? "match" : "mismatch";
                if (rec.verdict == "mismatch")
                    rec.witness = "rho=" + std::to_string(out.rho) +
                                  ";in-A-family=" + (structural ? "yes" : "no") +
                                  ";eop=" + edge_names(g, exact.witness);
                break;
            }
            case TheoremKind::m3: {
                const bool structural =
                    family_letter_present('R') || family_letter_present('S');
                rec.predicted = structural ? "rho=m-3" : "rho!=m-3";
                rec.verdict = structural == (out.rho == out.m - 3) ? "match" : "mismatch";
                if (rec.verdict == "mismatch") {
                    rec.witness = "rho=" + std::to_string(out.rho) +
                                  ";in-RS-family=" + (structural ? "yes" : "no") +
                                  ";eop=" + edge_names(g, exact.witness);
                    if (!structural && out.rho == out.m - 3) {
                        const std::string shape = classify_complement_shape(g, exact.witness);
                        rec.witness += ";complement=" + (shape.empty() ? "other" : shape);
                        rec.witness += ";see-audit";
                    }
                }
                break;
            }
            case TheoremKind::invariants: {
                std::string fail;
                const int diam = diameter(g);
                if (out.rho < (diam + 1) / 2)
                    fail = "prop2.1;diam=" + std::to_string(diam);
                int delta = out.n;
                for (int v = 0; v < out.n; ++v)
                    delta = std::min(delta, static_cast<int>(g.neighbors(v).size()));
                if (fail.empty() && delta > 0 && out.rho * delta > out.m)
                    fail = "m-over-delta;delta=" + std::to_string(delta);
                if (fail.empty()) {
                    const bool complete = 2 * out.m == out.n * (out.n - 1);
                    if ((out.rho == 1) != complete)
                        fail = std::string("rho1-complete;complete=") + (complete ? "yes" : "no");
                }
                if (fail.empty() && (out.rho == out.m) != is_star(g))
                    fail = std::string("rho-m-star;star=") + (is_star(g) ? "yes" : "no");
                if (fail.empty()) {
                    try {
                        const StarDecomposition dec = star_decomposition(g, exact.witness);
                        // edge count per star = leaf count; sum must be |D|
                        int edge_sum = 0;
                        for (const StarComponent& comp : dec.components)
                            edge_sum += static_cast<int>(comp.leaves.size());
                        if (edge_sum != out.rho) fail = "star-decomp;edge-sum-mismatch";
                        if (fail.empty() && !is_star(g) && out.m >= 3 &&
                            static_cast<int>(dec.components.size()) >= 2 &&
                            out.m - out.rho < static_cast<int>(dec.components.size()))
                            fail = "obs3.3;components=" +
                                   std::to_string(dec.components.size());
                    } catch (const NotDisjointStarsError&) {
                        fail = "star-decomp;not-disjoint-stars";
                    }
                }
                if (fail.empty() && out.rho == out.m - 3) {
                    for (const std::vector<int>& d : enumerate_eop_sets(g, out.rho, &conflicts)) {
                        if (classify_complement_shape(g, d).empty()) {
                            fail = "figure5-shape;eop=" + edge_names(g, d);
                            break;
                        }
                    }
                }
                rec.predicted = "invariants-hold";
                rec.verdict = fail.empty() ? "match" : "mismatch";
                rec.witness = fail;
                break;
            }
        }
        out.records.push_back(std::move(rec));
    }
}

}  // namespace detail

inline ScanResult run_scan(const std::vector<Graph>& corpus,
                           const std::vector<TheoremSel>& theorems, int jobs = 1) {
    const auto started = std::chrono::steady_clock::now();
    if (theorems.empty()) throw std::invalid_argument("empty theorem list");
    jobs = std::max(1, jobs);

    std::vector<detail::GraphEval> evals(corpus.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < corpus.size(); i = cursor.fetch_add(1))
            detail::eval_graph(corpus[i], theorems, evals[i]);
    };
    if (jobs == 1 || corpus.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::vector<size_t> order(evals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return evals[a].g6 < evals[b].g6;
    });

    ScanResult result;
    result.summary.corpus_size = static_cast<int>(corpus.size());
    for (const TheoremSel& sel : theorems) result.summary.mismatches.emplace_back(sel.name(), 0);
    std::vector<size_t> window_slots;
    for (size_t i = 0; i < theorems.size(); ++i)
        if (theorems[i].kind == TheoremKind::t_window) {
            window_slots.push_back(i);
            result.summary.vacuous.emplace_back(theorems[i].name(), std::make_pair(0, 0));
        }

    for (size_t idx : order) {
        detail::GraphEval& ev = evals[idx];
        ++result.summary.class_counts[ev.bucket];
        for (size_t i = 0; i < ev.records.size(); ++i) {
            if (ev.records[i].verdict == "mismatch") ++result.summary.mismatches[i].second;
            result.records.push_back(std::move(ev.records[i]));
        }
        for (size_t w = 0; w < window_slots.size() && w < ev.vacuous.size(); ++w) {
            result.summary.vacuous[w].second.first += ev.vacuous[w].first;
            result.summary.vacuous[w].second.second += ev.vacuous[w].second;
        }
    }
    result.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace eop
