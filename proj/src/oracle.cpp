#include "ebi/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ebi/constructor.hpp"
#include "ebi/theorem.hpp"

namespace ebi {

std::string to_string(OracleMode mode) {
    return mode == OracleMode::Exhaustive ? "EXHAUSTIVE" : "SAMPLED";
}

namespace {

// Uniform draw from [0, bound) by rejection; keeps sampling reproducible
// across standard libraries, unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

void enumerate_edge_friendly(const GraphShape& shape, const OracleConfig& config,
                             const std::function<void(const EdgeLabeling&)>& fn) {
    const int cells = shape.cells();
    if (cells > config.exhaustive_edge_budget)
        throw std::invalid_argument(
            "enumerate_edge_friendly: " + std::to_string(cells) +
            " edges exceed the exhaustive budget of " +
            std::to_string(config.exhaustive_edge_budget));
    const int ones = cells / 2;
    const int first = config.complement_halving ? 1 : 0;
    const int free_ones = ones - first;  // positions chosen from [first, cells)

    std::vector<int> pos(free_ones);
    for (int i = 0; i < free_ones; ++i) pos[i] = first + i;
    std::vector<std::uint8_t> buffer(cells);
    while (true) {
        std::fill(buffer.begin(), buffer.end(), 0);
        if (config.complement_halving) buffer[0] = 1;
        for (int p : pos) buffer[p] = 1;
        fn(EdgeLabeling(shape, buffer));
        int i = free_ones - 1;
        while (i >= 0 && pos[i] == cells - free_ones + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int t = i + 1; t < free_ones; ++t) pos[t] = pos[t - 1] + 1;
    }
}

OracleReport brute_force_ebi(const GraphShape& shape,
                             const OracleConfig& config) {
    if (config.exhaustive_edge_budget < 4 || config.sample_count < 1)
        throw std::invalid_argument(
            "brute_force_ebi: need budget >= 4 and sample_count >= 1");
    OracleReport report{shape, OracleMode::Exhaustive, 0, {}, {},
                        config.rng_seed};
    std::set<int> achieved;
    auto record = [&](const EdgeLabeling& labeling) {
        ++report.visited;
        const int index = stats(labeling).balanced_index;
        if (achieved.insert(index).second)
            report.witnesses.emplace(index, labeling);
    };

    if (shape.cells() <= config.exhaustive_edge_budget) {
        report.mode = OracleMode::Exhaustive;
        enumerate_edge_friendly(shape, config, record);
    } else {
        report.mode = OracleMode::Sampled;
        std::mt19937_64 rng(config.rng_seed);
        const int cells = shape.cells();
        std::vector<std::uint8_t> buffer(cells, 0);
        std::fill(buffer.begin(), buffer.begin() + cells / 2, 1);
        for (std::int64_t s = 0; s < config.sample_count; ++s) {
            for (int i = cells - 1; i > 0; --i) {
                const auto pick = static_cast<std::size_t>(
                    bounded(rng, static_cast<std::uint64_t>(i) + 1));
                std::swap(buffer[i], buffer[pick]);
            }
            record(EdgeLabeling(shape, buffer));
        }
    }
    report.achieved.assign(achieved.begin(), achieved.end());
    return report;
}

CrossCheckResult cross_check(const GraphShape& shape,
                             const OracleConfig& config) {
    CrossCheckResult result;
    result.theorem_set = ebi_set(shape);
    const int max_index = result.theorem_set.back();

    const OracleReport report = brute_force_ebi(shape, config);
    result.mode = report.mode;
    result.oracle_achieved = report.achieved;
    result.visited = report.visited;

    const SwitchTrace trace = generate_trace(shape);
    const TraceVerification replay = verify_trace(trace);
    result.constructor_final = replay.final_measured;
    if (!replay.pass)
        result.discrepancies.push_back("constructor trace failed replay: " +
                                       replay.message);
    else if (replay.final_measured != max_index)
        result.discrepancies.push_back(
            "constructor reached " + std::to_string(replay.final_measured) +
            ", theorem maximum is " + std::to_string(max_index));

    if (report.mode == OracleMode::Exhaustive) {
        if (report.achieved != result.theorem_set)
            result.discrepancies.push_back(
                "exhaustive achieved set differs from the theorem interval");
    } else {
        const int sampled_max =
            report.achieved.empty() ? 0 : report.achieved.back();
        if (sampled_max > max_index)
            result.discrepancies.push_back(
                "sampled labeling beat the theorem maximum: index " +
                std::to_string(sampled_max));
    }

    for (const auto& [index, witness] : report.witnesses) {
        if (!is_edge_friendly(witness) ||
            stats(witness).balanced_index != index) {
            result.discrepancies.push_back("stored witness for index " +
                                           std::to_string(index) +
                                           " does not re-validate");
        }
    }

    result.pass = result.discrepancies.empty();
    return result;
}

nlohmann::json report_to_json(const OracleReport& report) {
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& [index, labeling] : report.witnesses)
        witnesses[std::to_string(index)] = to_csv(labeling);
    return nlohmann::json{{"m", report.shape.m},
                          {"n", report.shape.n},
                          {"mode", to_string(report.mode)},
                          {"visited", report.visited},
                          {"achieved", report.achieved},
                          {"witnesses", std::move(witnesses)},
                          {"seed", report.seed}};
}

}  // namespace ebi
