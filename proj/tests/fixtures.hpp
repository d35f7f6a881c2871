#ifndef EBI_TESTS_FIXTURES_HPP
#define EBI_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ebi/graph_core.hpp"

namespace ebi::testing {

// The four K(4,4) matrices used as worked examples throughout; balanced
// indices 0, 0, 1, 2.
inline EdgeLabeling k44_example(char which) {
    const GraphShape shape(4, 4);
    switch (which) {
        case 'a':
            return make_labeling(shape, {{1, 1, 1, 1},
                                         {1, 1, 1, 1},
                                         {0, 0, 0, 0},
                                         {0, 0, 0, 0}});
        case 'b':
            return make_labeling(shape, {{1, 1, 1, 1},
                                         {1, 1, 1, 0},
                                         {1, 0, 0, 0},
                                         {0, 0, 0, 0}});
        case 'c':
            return make_labeling(shape, {{1, 0, 1, 1},
                                         {1, 1, 1, 0},
                                         {1, 1, 0, 0},
                                         {0, 0, 0, 0}});
        default:
            return make_labeling(shape, {{1, 1, 1, 0},
                                         {1, 1, 1, 0},
                                         {1, 1, 0, 0},
                                         {0, 0, 0, 0}});
    }
}

/// Arbitrary binary matrix (not necessarily edge-friendly).
inline EdgeLabeling random_labeling(const GraphShape& shape,
                                    std::mt19937_64& rng) {
    std::vector<std::uint8_t> entries(shape.cells());
    for (auto& v : entries) v = static_cast<std::uint8_t>(rng() & 1);
    return EdgeLabeling(shape, std::move(entries));
}

/// Uniform edge-friendly labeling: a shuffle of mn/2 ones and mn/2 zeros.
inline EdgeLabeling random_edge_friendly(const GraphShape& shape,
                                         std::mt19937_64& rng) {
    std::vector<std::uint8_t> entries(shape.cells(), 0);
    std::fill(entries.begin(), entries.begin() + shape.cells() / 2, 1);
    for (int i = shape.cells() - 1; i > 0; --i) {
        const auto pick = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(entries[i], entries[pick]);
    }
    return EdgeLabeling(shape, std::move(entries));
}

}  // namespace ebi::testing

#endif
