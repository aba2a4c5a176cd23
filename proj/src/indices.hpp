#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace resjoin {

/// A closed-form value evaluated verbatim from its reference expansion, next
/// to the oracle-backed number. Deviations are reported, never asserted zero:
/// several expansions carry arithmetic slips and the library's job is to
/// quantify them, not to correct them silently.
struct ReportedValue {
    std::string tag;
    double reported = 0.0; // NaN when the expansion is undefined for the input
    double computed = 0.0;
    double deviation = 0.0; // reported - computed
};

struct BoundCheck {
    double bound = 0.0;
    bool holds = false;
};

struct KemenyCentral {
    double by_definition = 0.0;
    double by_class_weights = 0.0;
    double difference = 0.0;
};

struct IndexReport {
    JoinKind kind = JoinKind::Plain;
    int order = 0;
    double kirchhoff_from_R = 0.0;
    double kirchhoff_trace = 0.0;
    double kemeny = 0.0;
    double foster_residual = 0.0;
    std::vector<ReportedValue> reported;
    std::optional<BoundCheck> bound_check;
    std::optional<KemenyCentral> kemeny_central;
};

/// Sum of the upper triangle of a resistance matrix.
double kirchhoff_from_resistance(const SymMatrix& r);

/// Kf via n * tr(L+); the trace route of the same quantity.
double kirchhoff_trace(const Graph& g);

/// Kf from any {1}-inverse X of the Laplacian: n tr X - e^T X e.
double kirchhoff_from_one_inverse(const SymMatrix& x);

/// Kemeny's constant (1/4m) sum_{i,j} d_i d_j r_ij over ordered vertex pairs.
double kemeny(const Graph& g);

/// The same constant from the spectrum of the normalized adjacency:
/// sum over the non-unit eigenvalues of 1/(1 - lambda).
double kemeny_spectral(const Graph& g);

/// Kemeny's constant of C(g) by definition, next to the class-weighted form
/// it is usually quoted in (weight 4 on original pairs, 2(n-1) on cross
/// pairs, (n-1)^2 on subdivision pairs). Those weights are swapped relative
/// to the actual degrees of C(g) (original vertices have degree n-1,
/// subdivision vertices 2), so the two values coincide only when n = 3;
/// both are returned.
KemenyCentral kemeny_central(const Graph& g);

/// |sum of resistances over the edges - (n - 1)|.
double foster_check(const Graph& g, const SymMatrix& r);

/// Verbatim expanded Kf formula for the requested construction, against the
/// resistance-sum value. g2 is ignored for Central.
ReportedValue reported_kirchhoff(JoinKind kind, const Graph& g1, const Graph* g2);

/// Every reported value applicable to the construction: the expanded formula,
/// plus the regular-graph form, the cycle and balanced-bipartite series, and
/// the worked-example scalars where the operands match them.
std::vector<ReportedValue> collect_reported(JoinKind kind, const Graph& g1, const Graph* g2);

/// Maximum-degree upper bound for Kf(C(g)), evaluated as stated; holds is
/// informational, not asserted.
BoundCheck central_kf_bound(const Graph& g);

/// Full report for a constructed join (or plain graph).
IndexReport index_report(const LabeledJoinGraph& joined);

std::string index_report_json(const IndexReport& report);

} // namespace resjoin
