// resjoin command line front end. Talks to the core library exclusively
// through the C interface in resjoin/resjoin.h; formatting and argument
// handling live here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resjoin/resjoin.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
    void operator()(rj_graph* g) const { rj_graph_free(g); }
};
using GraphPtr = std::unique_ptr<rj_graph, GraphDeleter>;

struct CliFailure {
    int exit_code;
};

[[noreturn]] void die(rj_status status) {
    std::cerr << "resjoin: " << rj_status_name(status) << ": " << rj_last_error() << "\n";
    throw CliFailure{kExitUsage};
}

void check(rj_status status) {
    if (status != RJ_OK) die(status);
}

std::string sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Numbers go through their 12-digit text form so emitted JSON reparses to
// the exact value printed.
json num12(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(sig12(x).c_str(), nullptr);
}

GraphPtr load_graph(const std::string& spec) {
    rj_graph* g = nullptr;
    check(rj_graph_from_spec(spec.c_str(), &g));
    return GraphPtr(g);
}

GraphPtr construct(const std::string& kind, const std::string& spec1, const std::string& spec2) {
    GraphPtr g1 = load_graph(spec1);
    rj_graph* out = nullptr;
    if (kind == "central") {
        check(rj_central(g1.get(), &out));
    } else if (kind == "cvj" || kind == "cej") {
        if (spec2.empty()) {
            std::cerr << "resjoin: " << kind << " needs two graphs\n";
            throw CliFailure{kExitUsage};
        }
        const GraphPtr g2 = load_graph(spec2);
        if (kind == "cvj") {
            check(rj_central_vertex_join(g1.get(), g2.get(), &out));
        } else {
            if (rj_graph_regular_degree(g1.get()) < 0)
                std::cerr << "resjoin: note: first operand is not regular; the closed-form "
                             "engine will refuse this join (oracle and block engines work)\n";
            check(rj_central_edge_join(g1.get(), g2.get(), &out));
        }
    } else if (kind == "plain") {
        return g1;
    } else {
        std::cerr << "resjoin: unknown construction \"" << kind
                  << "\" (expected central, cvj, cej or plain)\n";
        throw CliFailure{kExitUsage};
    }
    return GraphPtr(out);
}

const char* class_name(rj_vertex_class c) {
    switch (c) {
    case RJ_CLASS_PLAIN: return "plain";
    case RJ_CLASS_G1: return "g1";
    case RJ_CLASS_EDGE: return "edge";
    case RJ_CLASS_G2: return "g2";
    }
    return "plain";
}

json classes_json(const rj_graph* g) {
    json out = json::array();
    const uint32_t n = rj_graph_order(g);
    for (uint32_t v = 0; v < n; ++v)
        out.push_back({{"class", class_name(rj_graph_vertex_class(g, v))},
                       {"source", rj_graph_vertex_source(g, v)}});
    return out;
}

std::string fetch_string(rj_status (*fn)(const rj_graph*, char**), const rj_graph* g) {
    char* s = nullptr;
    check(fn(g, &s));
    std::string out(s);
    rj_string_free(s);
    return out;
}

int cmd_construct(const std::string& kind, const std::string& spec1, const std::string& spec2,
                  const std::string& format) {
    const GraphPtr g = construct(kind, spec1, spec2);
    const uint32_t n = rj_graph_order(g.get());
    const uint32_t m = rj_graph_size(g.get());

    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["kind"] = kind;
        j["order"] = n;
        j["size"] = m;
        j["edges"] = json::array();
        for (uint32_t k = 0; k < m; ++k) {
            uint32_t a = 0, b = 0;
            check(rj_graph_edge(g.get(), k, &a, &b));
            j["edges"].push_back({a, b});
        }
        j["classes"] = classes_json(g.get());
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        // the edge-list file format; pipe to a file and read back with file:
        std::cout << fetch_string(rj_graph_format_edge_list, g.get());
    } else {
        std::cout << fetch_string(rj_graph_format_edge_list, g.get());
        std::cout << "# vertex classes\n";
        for (uint32_t v = 0; v < n; ++v) {
            std::cout << "# " << v << ": " << class_name(rj_graph_vertex_class(g.get(), v));
            const int32_t src = rj_graph_vertex_source(g.get(), v);
            if (src >= 0) std::cout << " <- " << src;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

rj_engine parse_engine(const std::string& name) {
    if (name == "auto") return RJ_ENGINE_AUTO;
    if (name == "oracle") return RJ_ENGINE_ORACLE;
    if (name == "closed") return RJ_ENGINE_CLOSED_FORM;
    if (name == "block") return RJ_ENGINE_BLOCK_INVERSE;
    std::cerr << "resjoin: unknown engine \"" << name << "\"\n";
    throw CliFailure{kExitUsage};
}

const char* engine_name(rj_engine e) {
    switch (e) {
    case RJ_ENGINE_ORACLE: return "oracle";
    case RJ_ENGINE_CLOSED_FORM: return "closed";
    case RJ_ENGINE_BLOCK_INVERSE: return "block";
    case RJ_ENGINE_AUTO: return "auto";
    }
    return "auto";
}

int cmd_resist(const std::string& kind, const std::string& spec1, const std::string& spec2,
               const std::string& engine_arg, bool check_oracle, double tol,
               const std::string& format) {
    const GraphPtr g = construct(kind, spec1, spec2);
    rj_resistance_report* raw = nullptr;
    check(rj_resistance(g.get(), parse_engine(engine_arg), check_oracle ? 1 : 0, &raw));
    std::unique_ptr<rj_resistance_report, decltype(&rj_resistance_report_free)> report(
        raw, rj_resistance_report_free);

    const uint32_t n = rj_resistance_order(report.get());
    std::vector<double> r(static_cast<size_t>(n) * n);
    check(rj_resistance_matrix(report.get(), r.data(), r.size()));
    double deviation = 0.0;
    const bool has_dev = rj_resistance_oracle_deviation(report.get(), &deviation) != 0;

    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["order"] = n;
        j["classes"] = classes_json(g.get());
        j["engine"] = engine_name(rj_resistance_engine(report.get()));
        j["R"] = json::array();
        for (double x : r) j["R"].push_back(num12(x));
        if (has_dev) j["oracle_deviation"] = num12(deviation);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = 0; j < n; ++j)
                std::cout << (j ? "," : "") << sig12(r[i * n + j]);
            std::cout << "\n";
        }
    } else {
        std::cout << "resistance matrix, order " << n << ", engine "
                  << engine_name(rj_resistance_engine(report.get())) << "\n";
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = 0; j < n; ++j)
                std::printf("%10.6f ", r[i * n + j]);
            std::printf("\n");
        }
        if (has_dev) std::cout << "max deviation vs oracle: " << sig12(deviation) << "\n";
    }
    if (has_dev && !(deviation <= tol)) {
        std::cerr << "resjoin: oracle deviation " << sig12(deviation) << " exceeds tolerance "
                  << sig12(tol) << "\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}

int cmd_indices(const std::string& kind, const std::string& spec1, const std::string& spec2,
                const std::string& format) {
    const GraphPtr g = construct(kind, spec1, spec2);
    rj_index_report* raw = nullptr;
    check(rj_indices(g.get(), &raw));
    std::unique_ptr<rj_index_report, decltype(&rj_index_report_free)> report(
        raw, rj_index_report_free);

    char* s = nullptr;
    check(rj_index_report_json(report.get(), &s));
    json j = json::parse(s);
    rj_string_free(s);

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n";
        for (const char* key : {"kirchhoff_from_R", "kirchhoff_trace", "kemeny", "foster_residual"})
            std::cout << key << "," << sig12(j[key].get<double>()) << "\n";
        for (const auto& rv : j["reported"])
            std::cout << "reported." << rv["tag"].get<std::string>() << ","
                      << (rv["reported"].is_null() ? "nan" : sig12(rv["reported"].get<double>()))
                      << "\n";
    } else {
        std::cout << "kind:             " << j["kind"].get<std::string>() << " (order "
                  << j["order"].get<int>() << ")\n";
        std::cout << "Kf (sum of R):    " << sig12(j["kirchhoff_from_R"].get<double>()) << "\n";
        std::cout << "Kf (n tr L+):     " << sig12(j["kirchhoff_trace"].get<double>()) << "\n";
        std::cout << "Kemeny:           " << sig12(j["kemeny"].get<double>()) << "\n";
        std::cout << "Foster residual:  " << sig12(j["foster_residual"].get<double>()) << "\n";
        if (!j["reported"].empty()) {
            std::cout << "reported closed-form values (deviation = reported - computed):\n";
            for (const auto& rv : j["reported"]) {
                std::cout << "  " << rv["tag"].get<std::string>() << ": ";
                if (rv["reported"].is_null())
                    std::cout << "undefined for this input\n";
                else
                    std::cout << sig12(rv["reported"].get<double>()) << "  (deviation "
                              << sig12(rv["deviation"].get<double>()) << ")\n";
            }
        }
        if (j.contains("bound_check"))
            std::cout << "Kf(C(G)) bound:   " << sig12(j["bound_check"]["bound"].get<double>())
                      << (j["bound_check"]["holds"].get<bool>() ? "  (holds)" : "  (VIOLATED)")
                      << "\n";
        if (j.contains("kemeny_central"))
            std::cout << "Kemeny of C(G):   definition "
                      << sig12(j["kemeny_central"]["by_definition"].get<double>())
                      << ", class-weight form "
                      << sig12(j["kemeny_central"]["by_class_weights"].get<double>()) << "\n";
    }
    return kExitOk;
}

int cmd_verify(int max_n1, int max_n2, double tol, bool inject_fault, const std::string& format) {
    char* s = nullptr;
    int failures = 0;
    check(rj_verify(static_cast<uint32_t>(max_n1), static_cast<uint32_t>(max_n2), tol,
                    inject_fault ? 1 : 0, &s, &failures));
    json j = json::parse(s);
    rj_string_free(s);

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& sec : j["sections"]) {
            std::printf("[%s] %-28s cases=%-7ld worst=%-12s tol=%s\n",
                        sec["passed"].get<bool>() ? "PASS" : "FAIL",
                        sec["name"].get<std::string>().c_str(), sec["cases"].get<long>(),
                        sig12(sec["worst_deviation"].get<double>()).c_str(),
                        sig12(sec["tolerance"].get<double>()).c_str());
        }
        std::cout << "documented reference-value deviations (reported, not failed):\n";
        for (const auto& d : j["discrepancies"]) {
            std::cout << "  " << d["tag"].get<std::string>() << " @ "
                      << d["graph"].get<std::string>() << ": reported "
                      << (d["reported"].is_null() ? std::string("undefined")
                                                  : sig12(d["reported"].get<double>()))
                      << " vs computed " << sig12(d["computed"].get<double>()) << "\n";
        }
        std::cout << (failures == 0 ? "verify: all sections passed\n"
                                    : "verify: FAILURES present\n");
    }
    return failures == 0 ? kExitOk : kExitVerifyFailure;
}

int cmd_bench(const std::vector<int>& sizes) {
    std::vector<uint32_t> s(sizes.begin(), sizes.end());
    char* csv = nullptr;
    check(rj_bench(s.data(), s.size(), &csv));
    std::cout << csv;
    rj_string_free(csv);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central graphs, central vertex/edge joins: resistance matrices, "
                 "Kirchhoff indices, Kemeny constants, engine verification"};
    app.require_subcommand(1);

    std::string format = "pretty";
    std::string kind, spec1, spec2, engine = "auto";
    double tol = 1e-8;
    bool check_flag = false, inject_fault = false;
    int max_n1 = 5, max_n2 = 4;
    std::vector<int> sizes;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json, csv or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };
    auto add_graph_args = [&](CLI::App* cmd, bool needs_kind) {
        if (needs_kind)
            cmd->add_option("kind", kind, "construction: central, cvj, cej or plain")->required();
        cmd->add_option("graph1", spec1,
                        "first graph (path:N, cycle:N, complete:N, kbip:P,Q or file:PATH)")
            ->required();
        cmd->add_option("graph2", spec2, "second graph (cvj and cej only)");
        add_format(cmd);
    };

    CLI::App* construct_cmd = app.add_subcommand("construct", "build a join and print it");
    add_graph_args(construct_cmd, true);

    CLI::App* resist_cmd = app.add_subcommand("resist", "resistance matrix of a join");
    add_graph_args(resist_cmd, true);
    resist_cmd->add_option("--engine", engine, "auto, oracle, closed or block");
    resist_cmd->add_flag("--check", check_flag, "also run the oracle and report the deviation");
    resist_cmd->add_option("--tol", tol, "deviation tolerance for --check (default 1e-8)");

    CLI::App* indices_cmd = app.add_subcommand("indices", "Kirchhoff/Kemeny/Foster report");
    add_graph_args(indices_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant sweeps");
    add_format(verify_cmd);
    verify_cmd->add_option("--max-n1", max_n1, "first-operand order bound (default 5)");
    verify_cmd->add_option("--max-n2", max_n2, "second-operand order bound (default 4)");
    verify_cmd->add_option("--tol", tol, "engine-equivalence tolerance (default 1e-8)");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "perturb an engine constant to demonstrate a failing sweep");

    CLI::App* bench_cmd = app.add_subcommand("bench", "closed form vs oracle timings (CSV)");
    bench_cmd->add_option("sizes", sizes, "cycle sizes, e.g. 20 40 80");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct_cmd->parsed()) return cmd_construct(kind, spec1, spec2, format);
        if (resist_cmd->parsed())
            return cmd_resist(kind, spec1, spec2, engine, check_flag, tol, format);
        if (indices_cmd->parsed()) return cmd_indices(kind, spec1, spec2, format);
        if (verify_cmd->parsed()) return cmd_verify(max_n1, max_n2, tol, inject_fault, format);
        if (bench_cmd->parsed()) return cmd_bench(sizes);
    } catch (const CliFailure& f) {
        return f.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "resjoin: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
