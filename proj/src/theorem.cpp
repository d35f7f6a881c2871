#include "ebi/theorem.hpp"

#include <numeric>
#include <stdexcept>

namespace ebi {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::BothUnlabeled: return "BOTH_UNLABELED";
        case CaseTag::OneUnlabeled: return "ONE_UNLABELED";
        case CaseTag::NoneUnlabeled: return "NONE_UNLABELED";
        case CaseTag::NEquals2: return "N_EQUALS_2";
    }
    throw std::logic_error("to_string: bad CaseTag");
}

TheoremParams compute_params(const GraphShape& shape) {
    TheoremParams p{shape};
    const int half = shape.cells() / 2;  // e(1) of any edge-friendly labeling
    p.k = half / (shape.n / 2 + 1);
    p.k_prime = half % (shape.n / 2 + 1);
    p.j = half / (shape.m / 2 + 1);
    p.j_prime = half % (shape.m / 2 + 1);
    if (p.k_prime > shape.n / 2 || p.j_prime > shape.m / 2)
        throw std::logic_error("compute_params: remainder bound violated");
    if (shape.n == 2) {
        p.case_tag = CaseTag::NEquals2;
        p.max_index = 0;
        return p;
    }
    const bool a_unlabeled = p.k_prime == shape.n / 2;
    const bool b_unlabeled = p.j_prime == shape.m / 2;
    if (a_unlabeled && b_unlabeled)
        p.case_tag = CaseTag::BothUnlabeled;
    else if (a_unlabeled || b_unlabeled)
        p.case_tag = CaseTag::OneUnlabeled;
    else
        p.case_tag = CaseTag::NoneUnlabeled;
    const int bonus = (a_unlabeled ? 1 : 0) + (b_unlabeled ? 1 : 0);
    p.max_index = 2 * (p.k + p.j) + bonus - shape.m - shape.n;
    if (shape.m == 4 && shape.n == 4) {
        if (p.max_index != 2)
            throw std::logic_error("compute_params: K(4,4) maximum must be 2");
    } else {
        // every other even shape with n >= 4 has k > m/2, j > n/2 and a
        // strictly positive maximum
        if (p.k <= shape.m / 2 || p.j <= shape.n / 2 || p.max_index <= 0)
            throw std::logic_error("compute_params: positivity bound violated");
    }
    return p;
}

std::vector<int> ebi_set(const GraphShape& shape) {
    const TheoremParams p = compute_params(shape);
    std::vector<int> out(static_cast<std::size_t>(p.max_index) + 1);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace ebi
