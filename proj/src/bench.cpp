#include "bench.hpp"

#include <chrono>
#include <sstream>

#include "error.hpp"
#include "graph.hpp"
#include "resistance.hpp"
#include "util.hpp"

namespace resjoin {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<BenchRow> run_bench(const std::vector<int>& sizes) {
    std::vector<BenchRow> rows;
    rows.reserve(sizes.size());
    for (const int n : sizes) {
        if (n < 3) fail(ErrorCode::BadParams, "bench sizes must be at least 3");
        const Graph g1 = Graph::cycle(n);
        const Graph g2 = Graph::complete((n + 1) / 2);
        const LabeledJoinGraph joined = central_vertex_join(g1, g2);

        BenchRow row;
        row.n = n;
        row.order = joined.graph.order();

        auto t0 = std::chrono::steady_clock::now();
        const ResistanceReport closed = resistance_cvj(g1, g2);
        row.closed_seconds = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const ResistanceReport oracle = resistance_oracle(joined.graph);
        row.oracle_seconds = seconds_since(t0);

        row.ratio = row.closed_seconds > 0.0 ? row.oracle_seconds / row.closed_seconds : 0.0;
        row.max_abs_dev = closed.R.max_abs_diff(oracle.R);
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,order,closed_seconds,oracle_seconds,ratio,max_abs_dev\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.order << ',' << format_sig12(r.closed_seconds) << ','
            << format_sig12(r.oracle_seconds) << ',' << format_sig12(r.ratio) << ','
            << format_sig12(r.max_abs_dev) << '\n';
    }
    return out.str();
}

} // namespace resjoin
