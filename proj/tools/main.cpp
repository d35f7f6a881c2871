#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ebi/constructor.hpp"
#include "ebi/graph_core.hpp"
#include "ebi/oracle.hpp"
#include "ebi/theorem.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDiscrepancy = 2;

ebi::GraphShape parse_shape(int m, int n) {
    return ebi::GraphShape(m, n);  // throws std::invalid_argument
}

int run_params(int m, int n) {
    const ebi::TheoremParams p = ebi::compute_params(parse_shape(m, n));
    std::cout << "k=" << p.k << '\n'
              << "k_prime=" << p.k_prime << '\n'
              << "j=" << p.j << '\n'
              << "j_prime=" << p.j_prime << '\n'
              << "case=" << ebi::to_string(p.case_tag) << '\n'
              << "max=" << p.max_index << '\n';
    return 0;
}

int run_ebi(int m, int n) {
    const ebi::TheoremParams p = ebi::compute_params(parse_shape(m, n));
    std::cout << "0.." << p.max_index << '\n';
    return 0;
}

int run_construct(int m, int n, int index, const std::string& format) {
    const ebi::EdgeLabeling witness =
        ebi::construct_for_index(parse_shape(m, n), index);
    if (format == "csv") {
        std::cout << ebi::to_csv(witness);
    } else {
        for (int s = 1; s <= n; ++s) {
            for (int t = 1; t <= m; ++t) {
                if (t > 1) std::cout << ' ';
                std::cout << witness.at(s, t);
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_trace(int m, int n, const std::string& out_path) {
    const ebi::SwitchTrace trace = ebi::generate_trace(parse_shape(m, n));
    std::ofstream out(out_path);
    if (!out)
        throw std::invalid_argument("cannot open '" + out_path +
                                    "' for writing");
    out << ebi::trace_to_json(trace).dump(2) << '\n';
    std::cout << "switches=" << trace.entries.size() << '\n'
              << "final_index=" << trace.final_index << '\n';
    return 0;
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

int run_verify(int m, int n, const std::string& mode, std::int64_t samples,
               std::uint64_t seed) {
    const ebi::GraphShape shape = parse_shape(m, n);
    ebi::OracleConfig config;
    config.sample_count = samples;
    config.rng_seed = seed;
    if (mode == "exhaustive" && shape.cells() > config.exhaustive_edge_budget)
        throw std::invalid_argument(
            "exhaustive mode supports mn <= " +
            std::to_string(config.exhaustive_edge_budget) + "; K(" +
            std::to_string(m) + "," + std::to_string(n) + ") has mn = " +
            std::to_string(shape.cells()));
    if (mode == "sampled")
        config.exhaustive_edge_budget = 4;  // floor value; forces sampling
    const ebi::CrossCheckResult result = ebi::cross_check(shape, config);
    std::cout << "mode=" << ebi::to_string(result.mode) << '\n'
              << "visited=" << result.visited << '\n'
              << "theorem=" << join(result.theorem_set) << '\n'
              << "achieved=" << join(result.oracle_achieved) << '\n'
              << "constructor_final=" << result.constructor_final << '\n';
    for (const std::string& issue : result.discrepancies)
        std::cout << "discrepancy=" << issue << '\n';
    std::cout << "verdict=" << (result.pass ? "PASS" : "FAIL") << '\n';
    return result.pass ? 0 : kExitDiscrepancy;
}

int run_sweep(int max_m, const std::string& report_path) {
    if (max_m < 4 || max_m % 2 != 0)
        throw std::invalid_argument("--max-m must be an even integer >= 4");
    const ebi::OracleConfig config;
    nlohmann::json shapes = nlohmann::json::array();
    int checked = 0;
    int failures = 0;
    for (int n = 4; n <= max_m; n += 2) {
        for (int m = n; m <= max_m; m += 2) {
            const ebi::GraphShape shape(m, n);
            nlohmann::json row{{"m", m}, {"n", n}};
            bool ok = true;
            try {
                const ebi::SwitchTrace trace = ebi::generate_trace(shape);
                const ebi::TraceVerification replay = ebi::verify_trace(trace);
                row["max_index"] = trace.final_index;
                row["switches"] = trace.entries.size();
                row["trace_ok"] = replay.pass;
                if (!replay.pass) {
                    ok = false;
                    row["trace_error"] = replay.message;
                }
            } catch (const std::exception& e) {
                ok = false;
                row["trace_ok"] = false;
                row["trace_error"] = e.what();
            }
            if (shape.cells() <= config.exhaustive_edge_budget) {
                const ebi::CrossCheckResult cc = ebi::cross_check(shape, config);
                row["oracle_checked"] = true;
                row["oracle_ok"] = cc.pass;
                if (!cc.pass) ok = false;
            } else {
                row["oracle_checked"] = false;
            }
            if (!ok) {
                ++failures;
                std::cout << "FAIL m=" << m << " n=" << n << '\n';
            }
            shapes.push_back(std::move(row));
            ++checked;
        }
    }
    const nlohmann::json report{{"max_m", max_m},
                                {"exhaustive_edge_budget",
                                 config.exhaustive_edge_budget},
                                {"shapes_checked", checked},
                                {"failures", failures},
                                {"all_pass", failures == 0},
                                {"shapes", std::move(shapes)}};
    std::ofstream out(report_path);
    if (!out)
        throw std::invalid_argument("cannot open '" + report_path +
                                    "' for writing");
    out << report.dump(2) << '\n';
    std::cout << "sweep: " << checked << " shapes up to m=" << max_m << ": "
              << (failures == 0 ? "PASS" : "FAIL") << '\n';
    return failures == 0 ? 0 : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-balanced index sets of complete bipartite graphs with "
                 "two even parts"};
    app.require_subcommand(1);

    int m = 0;
    int n = 0;
    int index = 0;
    std::string format = "csv";
    std::string out_path;
    std::string report_path;
    std::string mode = "auto";
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    int max_m = 40;

    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("m", m, "size of part A (even, m >= n)")->required();
        cmd->add_option("n", n, "size of part B (even, n >= 2)")->required();
    };

    CLI::App* cmd_params =
        app.add_subcommand("params", "print the closed-form parameters");
    add_shape(cmd_params);

    CLI::App* cmd_ebi =
        app.add_subcommand("ebi", "print the edge-balanced index set");
    add_shape(cmd_ebi);

    CLI::App* cmd_construct = app.add_subcommand(
        "construct", "print a witness labeling for a balanced index");
    add_shape(cmd_construct);
    cmd_construct->add_option("--index", index, "target balanced index")
        ->required();
    cmd_construct->add_option("--format", format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));

    CLI::App* cmd_trace =
        app.add_subcommand("trace", "write the full switch trace as JSON");
    add_shape(cmd_trace);
    cmd_trace->add_option("--out", out_path, "output path")->required();

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "cross-check theorem, construction, and search");
    add_shape(cmd_verify);
    cmd_verify->add_option("--mode", mode, "auto, exhaustive, or sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    cmd_verify->add_option("--samples", samples, "sample count (sampled mode)");
    cmd_verify->add_option("--seed", seed, "RNG seed (sampled mode)");

    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "self-verify every even shape 4 <= n <= m <= M");
    cmd_sweep->add_option("--max-m", max_m, "largest part size (default 40)");
    cmd_sweep->add_option("--report", report_path, "JSON report path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_params) return run_params(m, n);
        if (*cmd_ebi) return run_ebi(m, n);
        if (*cmd_construct) return run_construct(m, n, index, format);
        if (*cmd_trace) return run_trace(m, n, out_path);
        if (*cmd_verify) return run_verify(m, n, mode, samples, seed);
        if (*cmd_sweep) return run_sweep(max_m, report_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitDiscrepancy;
    }
    return kExitUsage;
}
