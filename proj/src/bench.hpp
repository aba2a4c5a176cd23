#pragma once

#include <string>
#include <vector>

namespace resjoin {

/// One timing row: cycle(n) vertex-joined with complete(ceil(n/2)), closed
/// form against the full-Laplacian oracle. Matrix content is deterministic;
/// timings of course are not.
struct BenchRow {
    int n = 0;
    int order = 0;
    double closed_seconds = 0.0;
    double oracle_seconds = 0.0;
    double ratio = 0.0; // oracle / closed
    double max_abs_dev = 0.0;
};

std::vector<BenchRow> run_bench(const std::vector<int>& sizes);

/// CSV with header; header only for an empty size list.
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace resjoin
