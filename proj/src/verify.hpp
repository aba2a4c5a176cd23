#pragma once

#include <string>
#include <vector>

namespace resjoin {

struct VerifyOptions {
    int max_n1 = 5;       // cvj first-operand bound; central/cej sweeps use max_n1 + 1
    int max_n2 = 4;       // second-operand bound
    double tolerance = 1e-8; // engine-equivalence threshold
    bool inject_fault = false; // perturb one engine constant (harness self-test)
};

struct VerifySection {
    std::string name;
    long cases = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// A documented deviation between a verbatim closed-form value and the
/// oracle-backed number. Informational: never counted as a failure.
struct Discrepancy {
    std::string tag;
    std::string graph;
    double reported = 0.0;
    double computed = 0.0;
    double deviation = 0.0;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifySection> sections;
    std::vector<Discrepancy> discrepancies;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

VerifyReport run_verify(const VerifyOptions& options);

std::string verify_report_json(const VerifyReport& report);

} // namespace resjoin
