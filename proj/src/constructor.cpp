#include "ebi/constructor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace ebi {

QuotRem qr(int a, const GraphShape& shape) {
    if (a < 1) throw std::invalid_argument("qr: a must be positive");
    return QuotRem{(a - 1) / (shape.n / 2), (a - 1) % (shape.n / 2)};
}

EdgeLabeling step0_labeling(const GraphShape& shape) {
    std::vector<std::uint8_t> entries(shape.cells(), 0);
    std::fill(entries.begin(), entries.begin() + shape.cells() / 2, 1);
    return EdgeLabeling(shape, std::move(entries));
}

ConstructionParams construction_params(const GraphShape& shape) {
    ConstructionParams cp{shape, compute_params(shape)};
    if (shape.n == 2) return cp;
    const TheoremParams& p = cp.params;
    // Rows 1..n/2+1 hold mn/2 = k(n/2+1) + k' ones after Steps 1-3, each
    // row holding k or k+1, so exactly k' rows hold k+1. When k' >= 1 this
    // agrees with n/2 - (k mod n/2).
    cp.c = p.k_prime;
    cp.d = p.k - shape.m / 2;
    // k = m/2 is K(4,4) alone, which stops during Step 2 and never gets
    // this far.
    cp.step4_runs = p.k > shape.m / 2 &&
                    (p.j > shape.n / 2 + 1 || p.j_prime == shape.m / 2);
    if (cp.step4_runs) {
        const int half_cols = shape.m / 2 + 1;
        cp.b = p.j_prime == shape.m / 2
                   ? shape.cells() / 2 - half_cols * (shape.n / 2 + 1)
                   : (p.j - (shape.n / 2 + 1)) * half_cols;
        if (cp.d < 1 || cp.b < 1)
            throw std::logic_error("construction_params: Step 4 needs d >= 1 "
                                   "and b >= 1");
        if (cp.b > cp.c * cp.d + (shape.n / 2 + 1 - cp.c) * (cp.d - 1))
            throw std::logic_error("construction_params: Step 4 switch count "
                                   "exceeds the available surplus");
        if (cp.d == 1 && cp.b > cp.c * cp.d)
            throw std::logic_error("construction_params: second Step-4 family "
                                   "requires d >= 2");
    }
    return cp;
}

std::string to_string(StepLabel label) {
    switch (label) {
        case StepLabel::Step1: return "STEP1";
        case StepLabel::Step2: return "STEP2";
        case StepLabel::Step3: return "STEP3";
        case StepLabel::Step4A: return "STEP4A";
        case StepLabel::Step4B: return "STEP4B";
    }
    throw std::logic_error("to_string: bad StepLabel");
}

StepLabel step_label_from_string(const std::string& text) {
    if (text == "STEP1") return StepLabel::Step1;
    if (text == "STEP2") return StepLabel::Step2;
    if (text == "STEP3") return StepLabel::Step3;
    if (text == "STEP4A") return StepLabel::Step4A;
    if (text == "STEP4B") return StepLabel::Step4B;
    throw std::invalid_argument("step_label_from_string: '" + text + "'");
}

namespace {

// Mutable generation state: the working labeling plus the measured index,
// re-checked after every emitted switch.
class TraceBuilder {
  public:
    explicit TraceBuilder(const GraphShape& shape)
        : work_(step0_labeling(shape)),
          current_(stats(work_).balanced_index) {
        if (current_ != 0)
            throw std::logic_error("generate_trace: Step-0 matrix not at 0");
    }

    void emit(std::vector<TraceEntry>& out, StepLabel label, int r1, int c1,
              int r2, int c2) {
        const Switch sw{{r1, c1}, {r2, c2}};
        EdgeLabeling next = [&] {
            try {
                return apply_switch(work_, sw);
            } catch (const std::exception& e) {
                throw std::logic_error(std::string("generate_trace: ") +
                                       e.what());
            }
        }();
        const int measured = stats(next).balanced_index;
        if (measured != current_ && measured != current_ + 1)
            throw std::logic_error(
                "generate_trace: index moved from " +
                std::to_string(current_) + " to " + std::to_string(measured) +
                " at " + to_string(label) + "; construction is defective");
        work_ = std::move(next);
        current_ = measured;
        out.push_back(TraceEntry{label, sw, measured});
    }

    const EdgeLabeling& labeling() const { return work_; }
    int current() const { return current_; }

  private:
    EdgeLabeling work_;
    int current_;
};

}  // namespace

SwitchTrace generate_trace(const GraphShape& shape) {
    const ConstructionParams cp = construction_params(shape);
    const TheoremParams& p = cp.params;
    SwitchTrace trace{shape, step0_labeling(shape), {}, 0};
    if (shape.n == 2) return trace;

    const int m = shape.m;
    const int n = shape.n;
    TraceBuilder gen(shape);

    // Step 1: fill row n/2+1 left to right, draining 1s from the trailing
    // columns of the top half.
    for (int a = 1; a <= m / 2 - 1; ++a) {
        const QuotRem d = qr(a, shape);
        gen.emit(trace.entries, StepLabel::Step1, n / 2 + 1, a, n / 2 - d.r,
                 m - d.q);
    }

    // Step 2: two double switches, at columns m/2 and m/2+1. Each first
    // half moves a 1 down within the column (advancing u_{n/2+1} one
    // state); each second half restores the donor row from a trailing
    // column (making the column a 1-vertex). K(4,4) alone stops after the
    // first double switch, having already reached its maximum.
    for (int col : {m / 2, m / 2 + 1}) {
        const QuotRem d = qr(col, shape);
        gen.emit(trace.entries, StepLabel::Step2, n / 2 + 1, col, n / 2 - d.r,
                 col);
        gen.emit(trace.entries, StepLabel::Step2, n / 2 - d.r, col, n / 2 - d.r,
                 m - d.q);
        if (col == m / 2 && p.k == m / 2) break;
    }

    if (p.k > m / 2) {
        // Step 3: same switch form as Step 1 over columns m/2+2..k.
        for (int a = m / 2 + 2; a <= p.k; ++a) {
            const QuotRem d = qr(a, shape);
            gen.emit(trace.entries, StepLabel::Step3, n / 2 + 1, a, n / 2 - d.r,
                     m - d.q);
        }

        if (cp.step4_runs) {
            // Rows 1..c now hold k+1 ones, rows c+1..n/2+1 hold k, rows
            // below are empty; Step 4 relies on exactly this layout.
            const LabelingStats before = stats(gen.labeling());
            for (int s = 1; s <= n / 2 + 1; ++s) {
                const int expected = s <= cp.c ? p.k + 1 : p.k;
                if (before.row_sums[s - 1] != expected)
                    throw std::logic_error(
                        "generate_trace: row " + std::to_string(s) + " holds " +
                        std::to_string(before.row_sums[s - 1]) +
                        " ones at Step-4 entry, expected " +
                        std::to_string(expected));
            }
            for (int s = n / 2 + 2; s <= n; ++s)
                if (before.row_sums[s - 1] != 0)
                    throw std::logic_error(
                        "generate_trace: row " + std::to_string(s) +
                        " not empty at Step-4 entry");

            // Step 4: in-column switches only. Sources give up their
            // surplus over m/2+1 (d from the first c rows, d-1 from the
            // rest); targets fill rows n/2+2 onward left to right.
            const int half_cols = m / 2 + 1;
            for (int a = 1; a <= std::min(cp.c * cp.d, cp.b); ++a) {
                const int col = 1 + (a - 1) % half_cols;
                gen.emit(trace.entries, StepLabel::Step4A, 1 + (a - 1) / cp.d,
                         col, n / 2 + 2 + (a - 1) / half_cols, col);
            }
            for (int a = cp.c * cp.d + 1; a <= cp.b; ++a) {
                const int col = 1 + (a - 1) % half_cols;
                gen.emit(trace.entries, StepLabel::Step4B,
                         1 + cp.c + (a - 1 - cp.c * cp.d) / (cp.d - 1), col,
                         n / 2 + 2 + (a - 1) / half_cols, col);
            }

            const LabelingStats after = stats(gen.labeling());
            if (after.col_sums != before.col_sums)
                throw std::logic_error(
                    "generate_trace: Step 4 altered a column sum");
        }
    }

    trace.final_index = gen.current();
    if (trace.final_index != p.max_index)
        throw std::logic_error(
            "generate_trace: finished at index " +
            std::to_string(trace.final_index) + ", theorem maximum is " +
            std::to_string(p.max_index));
    return trace;
}

EdgeLabeling construct_for_index(const GraphShape& shape, int target) {
    const TheoremParams p = compute_params(shape);
    if (target < 0 || target > p.max_index)
        throw std::out_of_range("construct_for_index: target " +
                                std::to_string(target) + " outside [0, " +
                                std::to_string(p.max_index) + "]");
    const SwitchTrace trace = generate_trace(shape);
    EdgeLabeling current = trace.initial;
    if (target == 0) return current;
    for (const TraceEntry& entry : trace.entries) {
        current = apply_switch(current, entry.sw);
        if (entry.index_after == target) return current;
    }
    throw std::logic_error("construct_for_index: trace never reached " +
                           std::to_string(target));
}

TraceVerification verify_trace(const SwitchTrace& trace) {
    TraceVerification report;
    report.pass = true;
    report.expected_final = compute_params(trace.shape).max_index;
    auto fail = [&](int position, const std::string& why) {
        if (report.pass || position < report.first_failure) {
            report.first_failure = position;
            report.message = why;
        }
        report.pass = false;
    };

    EdgeLabeling current = trace.initial;
    if (stats(current).balanced_index != 0 || !is_edge_friendly(current))
        fail(-1, "initial labeling is not an index-0 edge-friendly matrix");

    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        const TraceEntry& entry = trace.entries[i];
        try {
            current = apply_switch(current, entry.sw);
        } catch (const std::exception& e) {
            fail(static_cast<int>(i), e.what());
            break;  // replay state is unusable past a bad switch
        }
        TraceEntryCheck check;
        check.expected = entry.index_after;
        check.measured = stats(current).balanced_index;
        check.edge_friendly = is_edge_friendly(current);
        report.entries.push_back(check);
        if (check.measured != check.expected)
            fail(static_cast<int>(i),
                 "entry " + std::to_string(i) + ": measured index " +
                     std::to_string(check.measured) + ", trace claims " +
                     std::to_string(check.expected));
        if (!check.edge_friendly)
            fail(static_cast<int>(i),
                 "entry " + std::to_string(i) + ": labeling lost edge-friendliness");
    }

    report.final_measured = stats(current).balanced_index;
    if (report.final_measured != report.expected_final)
        fail(static_cast<int>(trace.entries.size()),
             "final index " + std::to_string(report.final_measured) +
                 " differs from theorem maximum " +
                 std::to_string(report.expected_final));
    if (trace.final_index != report.expected_final)
        fail(static_cast<int>(trace.entries.size()),
             "trace reports final index " + std::to_string(trace.final_index) +
                 ", theorem maximum is " +
                 std::to_string(report.expected_final));
    return report;
}

nlohmann::json trace_to_json(const SwitchTrace& trace) {
    nlohmann::json entries = nlohmann::json::array();
    for (const TraceEntry& entry : trace.entries) {
        entries.push_back(nlohmann::json{
            {"step", to_string(entry.step)},
            {"switch",
             {{entry.sw.first.row, entry.sw.first.col},
              {entry.sw.second.row, entry.sw.second.col}}},
            {"index_after", entry.index_after}});
    }
    return nlohmann::json{{"m", trace.shape.m},
                          {"n", trace.shape.n},
                          {"max_index", trace.final_index},
                          {"entries", std::move(entries)}};
}

SwitchTrace trace_from_json(const nlohmann::json& doc) {
    const GraphShape shape(doc.at("m").get<int>(), doc.at("n").get<int>());
    SwitchTrace trace{shape, step0_labeling(shape), {},
                      doc.at("max_index").get<int>()};
    for (const auto& item : doc.at("entries")) {
        const auto& sw = item.at("switch");
        trace.entries.push_back(TraceEntry{
            step_label_from_string(item.at("step").get<std::string>()),
            Switch{{sw.at(0).at(0).get<int>(), sw.at(0).at(1).get<int>()},
                   {sw.at(1).at(0).get<int>(), sw.at(1).at(1).get<int>()}},
            item.at("index_after").get<int>()});
    }
    return trace;
}

}  // namespace ebi
