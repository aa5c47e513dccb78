#include "blockgraph/commands.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "blockgraph/block_closure.hpp"
#include "blockgraph/documents.hpp"
#include "blockgraph/oracle.hpp"
#include "blockgraph/partition_family.hpp"

namespace blockgraph::commands {

namespace {

CommandResult parse_failure(const std::exception& e) {
    return {usage_error, {}, "error[parse]: " + std::string(e.what()) + "\n"};
}

std::string violation_lines(const ValidationReport& report) {
    std::string err;
    for (const auto& violation : report.violations) err += "error[validation]: " + violation.describe() + "\n";
    return err;
}

} // namespace

CommandResult closure(std::string_view edge_list) {
    Graph graph;
    try {
        graph = parse_edge_list(edge_list);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    return {success, write_edge_list(block_closure(graph)), {}};
}

CommandResult partitions(std::string_view edge_list) {
    Graph graph;
    try {
        graph = parse_edge_list(edge_list);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    if (!is_connected(graph)) return {validation_failure, {}, "error[validation]: graph not connected\n"};
    return {success, write_family_document(family_from_graph(graph)), {}};
}

CommandResult reconstruct(std::string_view family_document) {
    PartitionFamily family;
    try {
        family = parse_family_document(family_document);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    const auto report = validate_family(family);
    if (!report.ok()) return {validation_failure, {}, violation_lines(report)};
    return {success, write_edge_list(edges_from_family(CompatibleFamily::check(family))), {}};
}

CommandResult validate(std::string_view family_document) {
    PartitionFamily family;
    try {
        family = parse_family_document(family_document);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    const auto report = validate_family(family);
    if (!report.ok()) return {validation_failure, {}, violation_lines(report)};
    return {success, "ok\n", {}};
}

CommandResult dot(std::string_view edge_list, bool highlight_blocks) {
    Graph graph;
    try {
        graph = parse_edge_list(edge_list);
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    return {success, write_dot(graph, highlight_blocks), {}};
}

CommandResult check(const CheckOptions& options) {
    if (options.max_n < 1 || options.max_n > 6) {
        return {usage_error, {}, "error[usage]: --max-n must be between 1 and 6\n"};
    }
    const auto started = std::chrono::steady_clock::now();
    std::ostringstream out;
    bool all_ok = true;

    auto report_sweep = [&](const oracle::SweepResult& sweep, const std::string& label) {
        const bool ok = sweep.passed == sweep.checked;
        all_ok = all_ok && ok;
        out << label << ": " << sweep.passed << "/" << sweep.checked << (ok ? " ok" : " FAILED") << "\n";
        if (sweep.first_failure) {
            out << "  first counterexample [" << oracle::identity_tag(*sweep.first_failure->failed_identity)
                << "]: " << sweep.first_failure->witness.value_or("") << "\n";
        }
    };

    for (std::size_t n = 1; n <= options.max_n; ++n) {
        report_sweep(oracle::check_exhaustive(n, options.threads), "n=" + std::to_string(n));
    }
    if (options.samples > 0) {
        for (std::size_t n : {7, 8}) {
            report_sweep(oracle::check_sampled(n, options.samples, options.seed),
                         "n=" + std::to_string(n) + " sampled (seed " + std::to_string(options.seed) + ")");
        }
    }

    std::vector<oracle::GoldenRow> rows;
    out << "counts (n, block graphs, families):\n";
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        const auto counts = oracle::count_correspondence(n);
        const bool equal = counts.block_graphs == counts.families;
        all_ok = all_ok && equal;
        out << "n=" << n << ": (" << counts.block_graphs << ", " << counts.families << ") "
            << (equal ? "equal" : "DIFFER") << "\n";
        rows.push_back({n, counts});
    }

    std::string err;
    if (options.golden) {
        if (!all_ok) {
            out << "golden: skipped (run not verified)\n";
        } else {
            try {
                switch (oracle::reconcile_golden(*options.golden, rows)) {
                case oracle::GoldenStatus::written: out << "golden: written\n"; break;
                case oracle::GoldenStatus::matched: out << "golden: matched\n"; break;
                case oracle::GoldenStatus::mismatched:
                    out << "golden: MISMATCH\n";
                    all_ok = false;
                    break;
                }
            } catch (const std::runtime_error& e) {
                return {usage_error, out.str(), "error[io]: " + std::string(e.what()) + "\n"};
            }
        }
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    char runtime[64];
    std::snprintf(runtime, sizeof runtime, "runtime: %.2f s\n", elapsed.count());
    err += runtime;
    return {all_ok ? success : validation_failure, out.str(), err};
}

} // namespace blockgraph::commands
