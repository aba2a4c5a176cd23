// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criterion 3 compares the engines against the reference matrices printed
// for the worked examples. Those matrices are reproduced here verbatim,
// including their defects; see the criterion-3 code for the alignment rules.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "linalg.hpp"
#include "resistance.hpp"
#include "verify.hpp"

using namespace resjoin;

namespace {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<CriterionResult> g_results;

void record(int id, const std::string& name, bool passed, const std::string& detail) {
    g_results.push_back({id, name, passed, detail});
    std::printf("[%s] criterion %d: %s — %s\n", passed ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// running worst-deviation trackers shared between criteria
struct Worst {
    double closed_vs_oracle = 0.0;
    double block_vs_oracle = 0.0;
    double block_vs_closed = 0.0;
    double foster = 0.0;
    double recursion = 0.0;
    long cases = 0;
};

double recursion_gap_of(const Graph& g, const SymMatrix& r) {
    const auto adj = g.adjacency_lists();
    double worst = 0.0;
    for (int i = 0; i < g.order(); ++i) {
        const double di = static_cast<double>(adj[i].size());
        double pair_sum = 0.0;
        for (int k : adj[i])
            for (int l : adj[i]) pair_sum += r(k, l);
        for (int j = 0; j < g.order(); ++j) {
            if (j == i) continue;
            double nb = 0.0;
            for (int k : adj[i]) nb += r(k, j);
            worst = std::max(worst, std::fabs((1.0 + nb - pair_sum / (2.0 * di)) / di - r(i, j)));
        }
    }
    return worst;
}

void sweep_join(const LabeledJoinGraph& joined, Worst& w) {
    const SymMatrix oracle = resistance_oracle(joined.graph).R;
    const SymMatrix closed = resistance(joined, Engine::ClosedForm, false).R;
    const SymMatrix block = resistance_block(joined).R;
    w.closed_vs_oracle = std::max(w.closed_vs_oracle, closed.max_abs_diff(oracle));
    w.block_vs_oracle = std::max(w.block_vs_oracle, block.max_abs_diff(oracle));
    w.block_vs_closed = std::max(w.block_vs_closed, block.max_abs_diff(closed));
    w.foster = std::max({w.foster, foster_check(joined.graph, closed),
                         foster_check(joined.graph, oracle), foster_check(joined.graph, block)});
    w.recursion = std::max(w.recursion, recursion_gap_of(joined.graph, oracle));
    ++w.cases;
}

// ---------------------------------------------------------------- criterion 1

Worst criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Worst w;
    for (int n = 2; n <= 6; ++n)
        for_each_connected_graph(n, [&](const Graph& g) { sweep_join(central(g), w); });
    const double secs = elapsed_s(t0);
    const bool ok = w.closed_vs_oracle <= 1e-8 && secs < 180.0;
    record(1, "central-graph engine equivalence, exhaustive n<=6", ok,
           std::to_string(w.cases) + " graphs, worst |closed-oracle| = " +
               fmt(w.closed_vs_oracle) + ", " + fmt(secs) + " s");
    return w;
}

// ---------------------------------------------------------------- criterion 2

std::vector<Graph> all_second_operands(int max_n2) {
    std::vector<Graph> out;
    for (int n2 = 1; n2 <= max_n2; ++n2)
        for_each_graph(n2, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::pair<Worst, Worst> criterion_2() {
    const auto seconds = all_second_operands(4);
    Worst cvj, cej;
    for (int n1 = 2; n1 <= 5; ++n1)
        for_each_connected_graph(n1, [&](const Graph& g1) {
            for (const Graph& g2 : seconds) sweep_join(central_vertex_join(g1, g2), cvj);
        });
    for (int n1 = 2; n1 <= 6; ++n1)
        for_each_connected_regular_graph(n1, [&](const Graph& g1) {
            for (const Graph& g2 : seconds) sweep_join(central_edge_join(g1, g2), cej);
        });
    const bool ok = cvj.closed_vs_oracle <= 1e-8 && cej.closed_vs_oracle <= 1e-8 &&
                    cvj.block_vs_oracle <= 1e-8 && cej.block_vs_oracle <= 1e-8 &&
                    cvj.block_vs_closed <= 1e-8 && cej.block_vs_closed <= 1e-8;
    record(2, "join engine equivalence (cvj n1<=5, cej regular n1<=6, n2<=4)", ok,
           std::to_string(cvj.cases) + " vertex joins (worst " + fmt(cvj.closed_vs_oracle) +
               "), " + std::to_string(cej.cases) + " edge joins (worst " +
               fmt(cej.closed_vs_oracle) + "), block engine worst " +
               fmt(std::max(cvj.block_vs_oracle, cej.block_vs_oracle)));
    return {cvj, cej};
}

// ---------------------------------------------------------------- criterion 3

// Reference matrix for cycle(4) vertex-joined with complete(2), as printed in
// the worked example. Cell (7,2) is an asymmetric misprint (0.58, partner
// 0.61); per the acceptance rule it is compared through its symmetric partner.
const double kRefCvj[10][10] = {
    {0, 0.45, 0.4, 0.45, 0.61, 0.61, 0.81, 0.81, 0.37, 0.37},
    {0.45, 0, 0.45, 0.4, 0.81, 0.61, 0.61, 0.81, 0.37, 0.37},
    {0.4, 0.45, 0, 0.45, 0.81, 0.81, 0.61, 0.61, 0.37, 0.37},
    {0.45, 0.4, 0.45, 0, 0.61, 0.81, 0.81, 0.61, 0.37, 0.37},
    {0.61, 0.81, 0.81, 0.61, 0, 1.1, 1.2, 1.1, 0.75, 0.75},
    {0.61, 0.61, 0.81, 0.81, 1.1, 0, 1.1, 1.2, 0.75, 0.75},
    {0.81, 0.61, 0.61, 0.81, 1.2, 1.1, 0, 1.2, 0.75, 0.75},
    {0.81, 0.81, 0.58, 0.61, 1.1, 1.2, 1.2, 0, 0.75, 0.75},
    {0.37, 0.37, 0.37, 0.37, 0.75, 0.75, 0.75, 0.75, 0, 0.33},
    {0.37, 0.37, 0.37, 0.37, 0.75, 0.75, 0.75, 0.75, 0.33, 0}};

// Reference matrix for the edge join: nine printed rows for a ten-vertex
// graph (one subdivision row missing); rows are matched to engine vertices
// by class pattern.
const double kRefCej[9][10] = {
    {0, 0.78, 0.57, 0.78, 0.52, 0.52, 0.67, 0.67, 0.6, 0.6},
    {0.78, 0, 0.78, 0.57, 0.67, 0.52, 0.52, 0.67, 0.6, 0.6},
    {0.57, 0.78, 0, 0.78, 0.67, 0.67, 0.52, 0.52, 0.6, 0.6},
    {0.78, 0.57, 0.78, 0, 0.52, 0.67, 0.67, 0.52, 0.6, 0.6},
    {0.52, 0.67, 0.67, 0.52, 0, 0.53, 0.57, 0.53, 0.41, 0.41},
    {0.52, 0.52, 0.67, 0.67, 0.53, 0, 0.53, 0.57, 0.41, 0.41},
    {0.67, 0.52, 0.52, 0.67, 0.57, 0.53, 0, 0.53, 0.41, 0.41},
    {0.6, 0.6, 0.6, 0.6, 0.41, 0.41, 0.41, 0.41, 0, 0.33},
    {0.6, 0.6, 0.6, 0.6, 0.41, 0.41, 0.41, 0.41, 0.33, 0}};

// Class-pattern alignment: search every class-preserving relabeling (G1 and
// subdivision permutations, G2 swap) for one that matches every compared
// cell within the tolerance. Returns the smallest number of mismatched
// cells over all relabelings (0 means a full match exists) together with
// the offending cells of the best relabeling.
struct AlignmentOutcome {
    int best_mismatches = -1;
    std::vector<std::string> offenders;
};

AlignmentOutcome align_reference(const SymMatrix& r, const double* ref, int printed_rows,
                                 bool cvj_partner_rule) {
    std::array<int, 4> g1{0, 1, 2, 3};
    AlignmentOutcome out;
    auto ref_at = [&](int a, int b) { return ref[a * 10 + b]; };
    do {
        std::array<int, 4> ev{4, 5, 6, 7};
        do {
            for (int swap = 0; swap < 2; ++swap) {
                std::array<int, 10> col{};
                for (int i = 0; i < 4; ++i) col[i] = g1[i];
                for (int i = 0; i < 4; ++i) col[4 + i] = ev[i];
                col[8] = 8 + swap;
                col[9] = 9 - swap;
                // printed rows follow the column labels; the edge-join print
                // drops the row of the eighth column.
                std::vector<int> row(col.begin(), col.end());
                if (printed_rows == 9) row.erase(row.begin() + 7);

                int mismatches = 0;
                std::vector<std::string> cells;
                for (int a = 0; a < printed_rows; ++a)
                    for (int b = 0; b < 10; ++b) {
                        double printed = ref_at(a, b);
                        if (cvj_partner_rule && a == 7 && b == 2) printed = ref_at(2, 7);
                        const double computed = r(row[a], col[b]);
                        if (std::fabs(printed - computed) > 0.01 + 1e-12) {
                            ++mismatches;
                            if (cells.size() < 4)
                                cells.push_back("printed[" + std::to_string(a + 1) + "][" +
                                                std::to_string(b + 1) + "]=" + fmt(printed) +
                                                " vs computed " + fmt(computed));
                        }
                    }
                if (out.best_mismatches < 0 || mismatches < out.best_mismatches) {
                    out.best_mismatches = mismatches;
                    out.offenders = cells;
                }
                if (out.best_mismatches == 0) return out;
            }
        } while (std::next_permutation(ev.begin(), ev.end()));
    } while (std::next_permutation(g1.begin(), g1.end()));
    return out;
}

void criterion_3() {
    const Graph c4 = Graph::cycle(4);
    const Graph k2 = Graph::complete(2);
    const SymMatrix r_cvj = resistance_cvj(c4, k2).R;
    const SymMatrix r_cej = resistance_cej(c4, k2).R;

    const AlignmentOutcome cvj = align_reference(r_cvj, &kRefCvj[0][0], 10, true);
    const AlignmentOutcome cej = align_reference(r_cej, &kRefCej[0][0], 9, false);

    std::string detail;
    if (cvj.best_mismatches == 0) {
        detail = "vertex-join matrix reproduced; ";
    } else {
        detail = "vertex-join matrix has " + std::to_string(cvj.best_mismatches) +
                 " cell(s) beyond 0.01 under every class-consistent relabeling (";
        for (std::size_t i = 0; i < cvj.offenders.size(); ++i)
            detail += (i ? "; " : "") + cvj.offenders[i];
        detail += ") — the printed matrix carries two disjoint-pair values (1.2) in one "
                  "subdivision row, which no relabeling of this join admits; ";
    }
    detail += cej.best_mismatches == 0
                  ? "edge-join matrix reproduced under class-pattern alignment"
                  : "edge-join matrix has " + std::to_string(cej.best_mismatches) +
                        " cell(s) beyond 0.01";
    record(3, "reference matrix reproduction (single catalogued typo excluded)",
           cvj.best_mismatches == 0 && cej.best_mismatches == 0, detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    const Graph c4 = Graph::cycle(4);
    const Graph k2 = Graph::complete(2);

    const double kf_cvj = kirchhoff_from_resistance(resistance_cvj(c4, k2).R);
    const double kf_cej = kirchhoff_from_resistance(resistance_cej(c4, k2).R);

    bool ok = std::fabs(kf_cvj - 30.166667) <= 1e-6 && std::fabs(kf_cvj - 30.15) <= 0.2 &&
              std::fabs(kf_cej - 25.595238) <= 1e-6 && std::fabs(kf_cej - 25.5) <= 0.2;

    // the deviations must appear in the index-report ledger
    const IndexReport cvj_rep = index_report(central_vertex_join(c4, k2));
    const IndexReport cej_rep = index_report(central_edge_join(c4, k2));
    auto has = [](const IndexReport& rep, const char* tag, double reported) {
        for (const auto& rv : rep.reported)
            if (rv.tag == tag && std::fabs(rv.reported - reported) < 1e-9 &&
                std::isfinite(rv.deviation))
                return true;
        return false;
    };
    ok = ok && has(cvj_rep, "cvj_reference_value", 30.15) &&
         has(cej_rep, "cej_reference_value", 25.5);

    record(4, "reference scalar reproduction with oracle arbitration", ok,
           "Kf(vertex join) = " + fmt(kf_cvj) + " (reference 30.15), Kf(edge join) = " +
               fmt(kf_cej) + " (reference 25.5); deviations present in the report ledger");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> pick_order(2, 40);
    std::uniform_real_distribution<double> pick_p(0.2, 0.9);

    double worst_lap = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_connected_graph(pick_order(rng), pick_p(rng), rng);
        const SymMatrix l = g.laplacian();
        worst_lap = std::max(
            worst_lap, penrose_deviation(l.to_matrix(), laplacian_pseudoinverse(l).to_matrix()));
    }

    std::uniform_real_distribution<double> pick_coeff(-2.0, 2.0);
    double worst_shift = 0.0;
    int done = 0;
    while (done < 200) {
        const Graph g = random_graph(pick_order(rng), pick_p(rng), rng);
        const double a = pick_coeff(rng), b = pick_coeff(rng);
        if (std::fabs(a) < 0.05 || std::fabs(b) < 0.05) continue;
        const SymMatrix l = g.laplacian();
        const int n = g.order();
        try {
            const SymMatrix x = shifted_laplacian_pseudoinverse(a, b, l);
            Matrix target = a * l.to_matrix() + b * Matrix::identity(n) -
                            Matrix::ones(n, n, b / static_cast<double>(n));
            worst_shift = std::max(worst_shift, penrose_deviation(target, x.to_matrix()));
            ++done;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularShift) throw;
        }
    }

    std::uniform_int_distribution<int> pick_big(4, 40);
    double worst_blocks = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_connected_graph(pick_big(rng), pick_p(rng), rng);
        const int n = g.order();
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<int> split(1, n - 1);
        const int n1 = split(rng);
        const SymMatrix l = g.laplacian();
        Matrix perm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) perm(i, j) = l(order[i], order[j]);
        const BlockOneInverse blocks = one_inverse_blocks(
            SymMatrix::from_matrix(perm.block(0, 0, n1, n1)), perm.block(0, n1, n1, n - n1),
            SymMatrix::from_matrix(perm.block(n1, n1, n - n1, n - n1)));
        const Matrix x = blocks.assemble().to_matrix();
        worst_blocks = std::max(worst_blocks, (perm * x * perm - perm).max_abs());
    }

    const bool ok = worst_lap <= 1e-9 && worst_shift <= 1e-9 && worst_blocks <= 1e-9;
    record(5, "identity suites (Penrose x200 x2, {1}-inverse x100)", ok,
           "worst Penrose " + fmt(std::max(worst_lap, worst_shift)) + ", worst |LXL-L| " +
               fmt(worst_blocks));
}

// ------------------------------------------------------- criteria 6 and 7

struct PlainSweep {
    double trace_gap = 0.0;
    double kemeny_gap = 0.0;
    double recursion = 0.0;
    double foster = 0.0;
    long cases = 0;
};

PlainSweep plain_sweep_to_7() {
    PlainSweep s;
    for (int n = 2; n <= 7; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            const SymMatrix r = resistance_oracle(g).R;
            const double kf_r = kirchhoff_from_resistance(r);
            s.trace_gap = std::max(s.trace_gap, std::fabs(kf_r - kirchhoff_trace(g)));
            double deg_sum = 0.0;
            for (int i = 0; i < g.order(); ++i)
                for (int j = 0; j < g.order(); ++j)
                    deg_sum += static_cast<double>(g.degree(i)) * g.degree(j) * r(i, j);
            const double by_definition = deg_sum / (4.0 * g.size());
            s.kemeny_gap =
                std::max(s.kemeny_gap, std::fabs(by_definition - kemeny_spectral(g)));
            s.recursion = std::max(s.recursion, recursion_gap_of(g, r));
            s.foster = std::max(s.foster, foster_check(g, r));
            ++s.cases;
        });
    }
    return s;
}

void criterion_6(const PlainSweep& plain, const Worst& central_w, const Worst& cvj_w,
                 const Worst& cej_w) {
    const double foster_worst =
        std::max({plain.foster, central_w.foster, cvj_w.foster, cej_w.foster});
    const double rec_worst =
        std::max({plain.recursion, central_w.recursion, cvj_w.recursion, cej_w.recursion});
    const bool ok = foster_worst <= 1e-9 && plain.trace_gap <= 1e-8 && rec_worst <= 1e-9;
    record(6, "lemma-level identities (Foster, trace route, local recursion)", ok,
           "worst Foster residual " + fmt(foster_worst) + ", worst |Kf_R - n tr L+| " +
               fmt(plain.trace_gap) + " over " + std::to_string(plain.cases) +
               " graphs to n=7, worst recursion gap " + fmt(rec_worst));
}

void criterion_7(const PlainSweep& plain) {
    const double k2 = kemeny(Graph::complete(2));
    const bool ok = plain.kemeny_gap <= 1e-8 && std::fabs(k2 - 0.5) <= 1e-12;
    record(7, "Kemeny consistency (definition vs spectrum, n<=7)", ok,
           "worst route gap " + fmt(plain.kemeny_gap) + ", kemeny(K2) = " + fmt(k2));
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    VerifyOptions options; // defaults: max_n1 5, max_n2 4, tolerance 1e-8
    const VerifyReport report = run_verify(options);

    auto has = [&](const char* tag, const char* graph, double reported, double computed) {
        for (const auto& d : report.discrepancies)
            if (d.tag == tag && d.graph == graph && std::fabs(d.reported - reported) < 1e-3 &&
                std::fabs(d.computed - computed) < 1e-3)
                return true;
        return false;
    };
    const bool items_present =
        has("central_expanded_formula", "central(cycle:3)", 14.5, 17.5) &&
        has("central_cycle_series", "central(cycle:3)", 26.0, 17.5) &&
        has("central_bipartite_series", "central(kbip:2,2)", 18.066667, 26.0) &&
        has("kemeny_central_class_weights", "central(cycle:4)", 8.433333, 7.766667);

    const bool ok = report.failures == 0 && items_present;
    record(8, "documented-discrepancy ledger via the verify sweep", ok,
           std::to_string(report.sections.size()) + " sections, " +
               std::to_string(report.failures) + " failures, " +
               std::to_string(report.discrepancies.size()) +
               " ledger entries (all four catalogued items present: " +
               (items_present ? "yes" : "NO") + ")");
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    std::printf("resjoin acceptance suite\n");

    const Worst central_w = criterion_1();
    const auto [cvj_w, cej_w] = criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    const PlainSweep plain = plain_sweep_to_7();
    criterion_6(plain, central_w, cvj_w, cej_w);
    criterion_7(plain);
    criterion_8();
    record(9, "desk-scale reproduction", true,
           "closed-form identities reproduced at the stated enumeration bounds (central n<=6, "
           "cvj n1<=5, cej n1<=6, n2<=4, identities n<=7); nothing scaled down");

    int failures = 0;
    for (const auto& r : g_results)
        if (!r.passed) ++failures;
    std::printf("%d/%zu criteria passed in %.1f s\n",
                static_cast<int>(g_results.size()) - failures, g_results.size(), elapsed_s(t0));
    if (failures) {
        std::printf("NOTE: criterion 3 compares against the reference matrix exactly as "
                    "printed; see the FAIL detail for the inconsistent printed cells.\n");
    }
    return failures;
}
