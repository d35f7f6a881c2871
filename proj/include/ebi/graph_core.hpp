#ifndef EBI_GRAPH_CORE_HPP
#define EBI_GRAPH_CORE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ebi {

/// Shape of a complete bipartite graph K(m,n) with part A of size m and
/// part B of size n. Both parts must be even and m >= n >= 2.
struct GraphShape {
    GraphShape(int m_, int n_);

    int m;  // |A|, matrix columns
    int n;  // |B|, matrix rows

    int cells() const { return m * n; }

    friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

enum class VertexLabel { Zero, One, Unlabeled };

/// One matrix position, 1-based: row s in [1..n], column t in [1..m].
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// An exchange of two matrix entries. All algorithmic switches swap a
/// 0-entry with a 1-entry, which keeps e(0) and e(1) fixed.
struct Switch {
    Cell first;
    Cell second;

    friend bool operator==(const Switch&, const Switch&) = default;
};

/// Edge labeling of K(m,n) stored as an n x m binary matrix: entry (s,t)
/// is the label of the edge between B-vertex u_s and A-vertex v_t.
/// Immutable after construction.
class EdgeLabeling {
  public:
    EdgeLabeling(GraphShape shape, std::vector<std::uint8_t> entries);

    const GraphShape& shape() const { return shape_; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    /// 1-based access, row s in [1..n], column t in [1..m].
    int at(int s, int t) const;

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

  private:
    GraphShape shape_;
    std::vector<std::uint8_t> entries_;  // row-major, n rows of m
};

/// Full count breakdown of a labeling: edge counts per label, per-vertex
/// 1-degrees, vertex-label tallies for both parts, and the balanced index
/// |v(1) - v(0)|.
struct LabelingStats {
    int e0 = 0;
    int e1 = 0;
    std::vector<int> col_sums;  // deg_1 of v_1..v_m
    std::vector<int> row_sums;  // deg_1 of u_1..u_n
    int a_ones = 0;
    int a_zeros = 0;
    int a_unlabeled = 0;
    int b_ones = 0;
    int b_zeros = 0;
    int b_unlabeled = 0;
    int balanced_index = 0;
};

EdgeLabeling make_labeling(const GraphShape& shape,
                           std::vector<std::uint8_t> entries);
EdgeLabeling make_labeling(const GraphShape& shape,
                           const std::vector<std::vector<int>>& rows);

LabelingStats stats(const GraphShape& shape,
                    std::span<const std::uint8_t> entries);
LabelingStats stats(const EdgeLabeling& labeling);

/// True iff |e(1) - e(0)| <= 1; with both parts even this forces
/// e(0) = e(1) = mn/2.
bool is_edge_friendly(const EdgeLabeling& labeling);

/// Returns a copy with the two addressed entries exchanged. Throws
/// std::out_of_range for bad positions and std::invalid_argument when the
/// entries are equal (an equal swap means the switch sequence is defective).
EdgeLabeling apply_switch(const EdgeLabeling& labeling, const Switch& sw);

/// Complement labeling: every 0 becomes 1 and vice versa. Swaps the roles
/// of v(1) and v(0), so the balanced index is unchanged.
EdgeLabeling flip_labels(const EdgeLabeling& labeling);

/// CSV form: n lines of m comma-separated 0/1 tokens, row s first, no
/// header. Round-trips bit-exactly.
std::string to_csv(const EdgeLabeling& labeling);
EdgeLabeling labeling_from_csv(const std::string& text);

}  // namespace ebi

#endif
