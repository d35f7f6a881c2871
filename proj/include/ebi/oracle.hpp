#ifndef EBI_ORACLE_HPP
#define EBI_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ebi/graph_core.hpp"

namespace ebi {

struct OracleConfig {
    /// Largest mn still enumerated exhaustively; C(24,12) ~ 2.7M matrices.
    int exhaustive_edge_budget = 24;
    /// Random labelings drawn when the shape exceeds the budget.
    std::int64_t sample_count = 1'000'000;
    std::uint64_t rng_seed = 1;
    /// Enumerate only matrices whose (1,1)-entry is 1. Complementing every
    /// label preserves the balanced index, so the achieved set is the same
    /// at half the work.
    bool complement_halving = false;
};

enum class OracleMode { Exhaustive, Sampled };

std::string to_string(OracleMode mode);

struct OracleReport {
    GraphShape shape;
    OracleMode mode = OracleMode::Exhaustive;
    std::uint64_t visited = 0;
    std::vector<int> achieved;  // sorted measured indices
    std::map<int, EdgeLabeling> witnesses;
    std::uint64_t seed = 0;
};

/// Calls fn once for every edge-friendly labeling of the shape (every
/// n x m binary matrix with exactly mn/2 ones), in lexicographic order of
/// the 1-positions. The labeling reference is only valid during the call.
/// Throws std::invalid_argument when mn exceeds the exhaustive budget.
void enumerate_edge_friendly(const GraphShape& shape, const OracleConfig& config,
                             const std::function<void(const EdgeLabeling&)>& fn);

/// Exhaustive search below the budget, uniform sampling above it. Records
/// every achieved balanced index with one witness labeling each.
OracleReport brute_force_ebi(const GraphShape& shape,
                             const OracleConfig& config);

struct CrossCheckResult {
    bool pass = false;
    OracleMode mode = OracleMode::Exhaustive;
    std::vector<std::string> discrepancies;
    std::vector<int> theorem_set;
    std::vector<int> oracle_achieved;
    int constructor_final = 0;
    std::uint64_t visited = 0;
};

/// Pits the closed form, the switching construction, and the search
/// against each other. Exhaustive mode demands the three agree on the
/// exact index set; sampled mode demands no sample beats the closed-form
/// maximum while the construction attains it.
CrossCheckResult cross_check(const GraphShape& shape,
                             const OracleConfig& config);

/// JSON form: { "m", "n", "mode", "visited", "achieved",
/// "witnesses": { "<index>": CSV matrix }, "seed" }.
nlohmann::json report_to_json(const OracleReport& report);

}  // namespace ebi

#endif
