#ifndef EBI_THEOREM_HPP
#define EBI_THEOREM_HPP

#include <string>
#include <vector>

#include "ebi/graph_core.hpp"

namespace ebi {

/// Which branch of the closed-form maximum applies: whether maximizing
/// v(1) leaves room for an unlabeled vertex in both parts, one part, or
/// neither. n = 2 is its own branch with maximum 0.
enum class CaseTag { BothUnlabeled, OneUnlabeled, NoneUnlabeled, NEquals2 };

std::string to_string(CaseTag tag);

/// Closed-form parameters for K(m,n):
///   k  = mn/2 div (n/2+1)   largest possible v_A(1)
///   k' = mn/2 mod (n/2+1)   leftover 1-edges once v_A(1) is maximized
///   j, j'                   the same for part B against m/2+1
/// max_index is the largest balanced index over all edge-friendly
/// labelings; the edge-balanced index set is {0, ..., max_index}.
struct TheoremParams {
    GraphShape shape;
    int k = 0;
    int k_prime = 0;
    int j = 0;
    int j_prime = 0;
    CaseTag case_tag = CaseTag::NEquals2;
    int max_index = 0;
};

TheoremParams compute_params(const GraphShape& shape);

/// The full edge-balanced index set, materialized as {0, ..., max_index}.
std::vector<int> ebi_set(const GraphShape& shape);

}  // namespace ebi

#endif
