#include <stdexcept>

#include <doctest.h>

#include "ebi/theorem.hpp"

using namespace ebi;

namespace {

void check_params(int m, int n, int k, int k_prime, int j, int j_prime,
                  CaseTag tag, int max_index) {
    const TheoremParams p = compute_params(GraphShape(m, n));
    CAPTURE(m);
    CAPTURE(n);
    CHECK(p.k == k);
    CHECK(p.k_prime == k_prime);
    CHECK(p.j == j);
    CHECK(p.j_prime == j_prime);
    CHECK(p.case_tag == tag);
    CHECK(p.max_index == max_index);
}

}  // namespace

TEST_CASE("closed-form parameters for known shapes") {
    check_params(4, 4, 2, 2, 2, 2, CaseTag::BothUnlabeled, 2);
    check_params(6, 4, 4, 0, 3, 0, CaseTag::NoneUnlabeled, 4);
    check_params(8, 4, 5, 1, 3, 1, CaseTag::NoneUnlabeled, 4);
    check_params(10, 4, 6, 2, 3, 2, CaseTag::OneUnlabeled, 5);
    check_params(14, 4, 9, 1, 3, 4, CaseTag::NoneUnlabeled, 6);
    check_params(6, 6, 4, 2, 4, 2, CaseTag::NoneUnlabeled, 4);
    check_params(8, 6, 6, 0, 4, 4, CaseTag::OneUnlabeled, 7);
    check_params(12, 6, 9, 0, 5, 1, CaseTag::NoneUnlabeled, 10);
    check_params(10, 8, 8, 0, 6, 4, CaseTag::NoneUnlabeled, 10);
    check_params(16, 8, 12, 4, 7, 1, CaseTag::OneUnlabeled, 15);
    check_params(28, 16, 24, 8, 14, 14, CaseTag::BothUnlabeled, 34);
    check_params(40, 40, 38, 2, 38, 2, CaseTag::NoneUnlabeled, 72);
}

TEST_CASE("every K(m,2) has maximum 0") {
    for (int m = 2; m <= 40; m += 2) {
        const TheoremParams p = compute_params(GraphShape(m, 2));
        CHECK(p.max_index == 0);
        CHECK(p.case_tag == CaseTag::NEquals2);
    }
    // div/mod values are still computed for n = 2, just unused for the max
    const TheoremParams p = compute_params(GraphShape(12, 2));
    CHECK(p.k == 6);
    CHECK(p.j == 1);
    CHECK(p.j_prime == 5);
}

TEST_CASE("ebi_set materializes the interval") {
    CHECK(ebi_set(GraphShape(4, 4)) == std::vector<int>{0, 1, 2});
    CHECK(ebi_set(GraphShape(8, 2)) == std::vector<int>{0});
    CHECK(ebi_set(GraphShape(6, 4)) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("bounds hold across the full parameter range") {
    for (int n = 4; n <= 200; n += 2) {
        for (int m = n; m <= 200; m += 2) {
            const TheoremParams p = compute_params(GraphShape(m, n));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(p.k_prime <= n / 2);
            CHECK(p.j_prime <= m / 2);
            if (m == 4 && n == 4) {
                CHECK(p.max_index == 2);
            } else {
                CHECK(p.k > m / 2);
                CHECK(p.j > n / 2);
                CHECK(p.max_index > 0);
            }
        }
    }
}

TEST_CASE("case tag strings") {
    CHECK(to_string(CaseTag::BothUnlabeled) == "BOTH_UNLABELED");
    CHECK(to_string(CaseTag::OneUnlabeled) == "ONE_UNLABELED");
    CHECK(to_string(CaseTag::NoneUnlabeled) == "NONE_UNLABELED");
    CHECK(to_string(CaseTag::NEquals2) == "N_EQUALS_2");
}

TEST_CASE("invalid shapes are rejected before any computation") {
    CHECK_THROWS_AS(compute_params(GraphShape(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS(compute_params(GraphShape(4, 6)), std::invalid_argument);
}
