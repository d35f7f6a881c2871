#ifndef EBI_CONSTRUCTOR_HPP
#define EBI_CONSTRUCTOR_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ebi/graph_core.hpp"
#include "ebi/theorem.hpp"

namespace ebi {

/// Quotient and remainder of (a-1) divided by n/2; drives the row/column
/// targets of the Step 1-3 switches.
struct QuotRem {
    int q = 0;
    int r = 0;
};

QuotRem qr(int a, const GraphShape& shape);

/// Step-4 bookkeeping. After Steps 1-3 the rows 1..n/2+1 hold all mn/2
/// ones: rows 1..c hold k+1 each and rows c+1..n/2+1 hold k each, so c is
/// forced to equal k'. d = k - m/2 is the surplus of a (k+1)-row over the
/// m/2+1 ones it must keep; b is the number of Step-4 switches.
struct ConstructionParams {
    GraphShape shape;
    TheoremParams params;
    int c = 0;
    int d = 0;
    int b = 0;
    bool step4_runs = false;
};

ConstructionParams construction_params(const GraphShape& shape);

/// The starting matrix: top n/2 rows all 1, bottom n/2 rows all 0.
/// Edge-friendly with balanced index 0.
EdgeLabeling step0_labeling(const GraphShape& shape);

enum class StepLabel { Step1, Step2, Step3, Step4A, Step4B };

std::string to_string(StepLabel label);
StepLabel step_label_from_string(const std::string& text);

struct TraceEntry {
    StepLabel step;
    Switch sw;
    int index_after = 0;  // measured balanced index once sw is applied
};

/// The ordered switch sequence from the Step-0 matrix to a labeling of
/// maximal balanced index. Indices along the trace start at 0, never
/// decrease, and move in steps of at most 1, so every index up to
/// final_index is witnessed by some prefix.
struct SwitchTrace {
    GraphShape shape;
    EdgeLabeling initial;
    std::vector<TraceEntry> entries;
    int final_index = 0;
};

/// Generates the full switch sequence for the shape. The generator
/// re-measures the matrix after every switch and throws std::logic_error
/// if a switch addresses equal entries, an index increment leaves {0,1},
/// or the finished trace misses the theorem maximum; any such failure
/// means the construction itself is defective, never bad user input.
/// For n = 2 the trace is empty and final_index is 0.
SwitchTrace generate_trace(const GraphShape& shape);

/// Witness labeling whose measured balanced index equals target.
/// Throws std::out_of_range unless 0 <= target <= max_index.
EdgeLabeling construct_for_index(const GraphShape& shape, int target);

struct TraceEntryCheck {
    int measured = 0;
    int expected = 0;
    bool edge_friendly = false;
};

/// Independent replay of a trace through the stats engine.
struct TraceVerification {
    bool pass = false;
    std::vector<TraceEntryCheck> entries;
    int first_failure = -1;  // entry position of the first problem, or -1
    std::string message;
    int final_measured = 0;
    int expected_final = 0;  // theorem maximum for the shape
};

TraceVerification verify_trace(const SwitchTrace& trace);

/// JSON form: { "m", "n", "max_index", "entries": [ { "step",
/// "switch": [[r1,c1],[r2,c2]], "index_after" } ] }, 1-based positions.
nlohmann::json trace_to_json(const SwitchTrace& trace);
SwitchTrace trace_from_json(const nlohmann::json& doc);

}  // namespace ebi

#endif
