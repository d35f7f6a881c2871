#include "ebi/graph_core.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ebi {

GraphShape::GraphShape(int m_, int n_) : m(m_), n(n_) {
    if (m % 2 != 0 || n % 2 != 0)
        throw std::invalid_argument("GraphShape: m and n must be even");
    if (n < 2 || m < n)
        throw std::invalid_argument("GraphShape: need m >= n >= 2");
}

EdgeLabeling::EdgeLabeling(GraphShape shape, std::vector<std::uint8_t> entries)
    : shape_(shape), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.cells())
        throw std::invalid_argument("EdgeLabeling: expected " +
                                    std::to_string(shape_.cells()) +
                                    " entries, got " +
                                    std::to_string(entries_.size()));
    for (auto v : entries_)
        if (v != 0 && v != 1)
            throw std::invalid_argument("EdgeLabeling: entries must be 0 or 1");
}

int EdgeLabeling::at(int s, int t) const {
    if (s < 1 || s > shape_.n || t < 1 || t > shape_.m)
        throw std::out_of_range("EdgeLabeling::at: position (" +
                                std::to_string(s) + "," + std::to_string(t) +
                                ") outside " + std::to_string(shape_.n) + "x" +
                                std::to_string(shape_.m));
    return entries_[static_cast<std::size_t>(s - 1) * shape_.m + (t - 1)];
}

EdgeLabeling make_labeling(const GraphShape& shape,
                           std::vector<std::uint8_t> entries) {
    return EdgeLabeling(shape, std::move(entries));
}

EdgeLabeling make_labeling(const GraphShape& shape,
                           const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != shape.n)
        throw std::invalid_argument("make_labeling: expected " +
                                    std::to_string(shape.n) + " rows, got " +
                                    std::to_string(rows.size()));
    std::vector<std::uint8_t> flat;
    flat.reserve(shape.cells());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != shape.m)
            throw std::invalid_argument("make_labeling: row of width " +
                                        std::to_string(row.size()) +
                                        ", expected " + std::to_string(shape.m));
        for (int v : row) {
            if (v != 0 && v != 1)
                throw std::invalid_argument(
                    "make_labeling: entries must be 0 or 1");
            flat.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return EdgeLabeling(shape, std::move(flat));
}

LabelingStats stats(const GraphShape& shape,
                    std::span<const std::uint8_t> entries) {
    if (static_cast<int>(entries.size()) != shape.cells())
        throw std::invalid_argument("stats: entry count does not match shape");
    LabelingStats st;
    st.col_sums.assign(shape.m, 0);
    st.row_sums.assign(shape.n, 0);
    for (int s = 0; s < shape.n; ++s) {
        const std::uint8_t* row = entries.data() +
                                  static_cast<std::size_t>(s) * shape.m;
        int sum = 0;
        for (int t = 0; t < shape.m; ++t) {
            sum += row[t];
            st.col_sums[t] += row[t];
        }
        st.row_sums[s] = sum;
    }
    st.e1 = std::accumulate(st.row_sums.begin(), st.row_sums.end(), 0);
    st.e0 = shape.cells() - st.e1;
    const int col_half = shape.n / 2;
    for (int c : st.col_sums) {
        if (c > col_half)
            ++st.a_ones;
        else if (c < col_half)
            ++st.a_zeros;
        else
            ++st.a_unlabeled;
    }
    const int row_half = shape.m / 2;
    for (int r : st.row_sums) {
        if (r > row_half)
            ++st.b_ones;
        else if (r < row_half)
            ++st.b_zeros;
        else
            ++st.b_unlabeled;
    }
    st.balanced_index =
        std::abs((st.a_ones + st.b_ones) - (st.a_zeros + st.b_zeros));
    return st;
}

LabelingStats stats(const EdgeLabeling& labeling) {
    return stats(labeling.shape(), labeling.entries());
}

bool is_edge_friendly(const EdgeLabeling& labeling) {
    int e1 = 0;
    for (auto v : labeling.entries()) e1 += v;
    const int e0 = labeling.shape().cells() - e1;
    return std::abs(e1 - e0) <= 1;
}

EdgeLabeling apply_switch(const EdgeLabeling& labeling, const Switch& sw) {
    const GraphShape& shape = labeling.shape();
    auto check = [&](const Cell& cell) {
        if (cell.row < 1 || cell.row > shape.n || cell.col < 1 ||
            cell.col > shape.m)
            throw std::out_of_range("apply_switch: position (" +
                                    std::to_string(cell.row) + "," +
                                    std::to_string(cell.col) + ") outside " +
                                    std::to_string(shape.n) + "x" +
                                    std::to_string(shape.m));
        return static_cast<std::size_t>(cell.row - 1) * shape.m +
               (cell.col - 1);
    };
    const std::size_t i = check(sw.first);
    const std::size_t k = check(sw.second);
    std::vector<std::uint8_t> out = labeling.entries();
    if (i == k || out[i] == out[k])
        throw std::invalid_argument(
            "apply_switch: entries (" + std::to_string(sw.first.row) + "," +
            std::to_string(sw.first.col) + ") and (" +
            std::to_string(sw.second.row) + "," +
            std::to_string(sw.second.col) +
            ") hold equal values; switch sequence is defective");
    std::swap(out[i], out[k]);
    return EdgeLabeling(shape, std::move(out));
}

EdgeLabeling flip_labels(const EdgeLabeling& labeling) {
    std::vector<std::uint8_t> out = labeling.entries();
    for (auto& v : out) v ^= 1;
    return EdgeLabeling(labeling.shape(), std::move(out));
}

std::string to_csv(const EdgeLabeling& labeling) {
    const GraphShape& shape = labeling.shape();
    std::string out;
    out.reserve(static_cast<std::size_t>(shape.cells()) * 2);
    for (int s = 1; s <= shape.n; ++s) {
        for (int t = 1; t <= shape.m; ++t) {
            if (t > 1) out.push_back(',');
            out.push_back(labeling.at(s, t) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

EdgeLabeling labeling_from_csv(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream cellstream(line);
        std::string token;
        while (std::getline(cellstream, token, ',')) {
            if (token == "0")
                row.push_back(0);
            else if (token == "1")
                row.push_back(1);
            else
                throw std::invalid_argument("labeling_from_csv: bad token '" +
                                            token + "'");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("labeling_from_csv: empty input");
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows.front().size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("labeling_from_csv: ragged rows");
    return make_labeling(GraphShape(m, n), rows);
}

}  // namespace ebi
