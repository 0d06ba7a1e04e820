#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "capax/matrix.hpp"

namespace capax::fixtures {

// Size-4 independent set of hamming_graph(5,{1,2}), decimal labels.
inline std::vector<int> independent_set_4() { return {1, 14, 18, 29}; }

// Size-20 independent set of the strong square of hamming_graph(5,{1,2}),
// stored as (g,h) label pairs and mapped to product indices g*32+h at load.
inline std::vector<std::pair<int, int>> product_independent_set_pairs() {
    return {{24, 31}, {20, 24}, {12, 6},  {28, 1},  {18, 5},
            {10, 16}, {26, 10}, {6, 11},  {22, 22}, {14, 29},
            {17, 2},  {9, 9},   {25, 20}, {5, 21},  {21, 15},
            {13, 26}, {3, 30},  {19, 25}, {11, 7},  {7, 0}};
}

inline std::vector<int> product_independent_set_indices() {
    std::vector<int> indices;
    for (auto [g, h] : product_independent_set_pairs()) indices.push_back(g * 32 + h);
    std::sort(indices.begin(), indices.end());
    return indices;
}

// Published 32x32 Schrijver certificate for hamming_graph(5,{1,2}): entry
// alphabet {3, 1, -1}, with 3 exactly on the antidiagonal (1-based i+j = 33).
// The source data carries a single asymmetric misprint at 0-based (29,8),
// resolved here to +1, the value forced by symmetry and the non-edge >= 1
// constraint (the pair sits at Hamming distance 3).
inline const std::array<std::array<std::int8_t, 32>, 32>& certificate_table() {
    static const std::array<std::array<std::int8_t, 32>, 32> table = {{
    {{ 1, -1, -1, -1, -1, -1, -1,  1, -1, -1, -1,  1, -1,  1,  1,  1, -1, -1, -1,  1, -1,  1,  1,  1, -1,  1,  1,  1,  1,  1,  1,  3}},
    {{-1,  1, -1, -1, -1, -1,  1, -1, -1, -1,  1, -1,  1, -1,  1,  1, -1, -1,  1, -1,  1, -1,  1,  1,  1, -1,  1,  1,  1,  1,  3,  1}},
    {{-1, -1,  1, -1, -1,  1, -1, -1, -1,  1, -1, -1,  1,  1, -1,  1, -1,  1, -1, -1,  1,  1, -1,  1,  1,  1, -1,  1,  1,  3,  1,  1}},
    {{-1, -1, -1,  1,  1, -1, -1, -1,  1, -1, -1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  1,  1,  1, -1,  1,  1,  1, -1,  3,  1,  1,  1}},
    {{-1, -1, -1,  1,  1, -1, -1, -1, -1,  1,  1,  1, -1, -1, -1,  1, -1,  1,  1,  1, -1, -1, -1,  1,  1,  1,  1,  3, -1,  1,  1,  1}},
    {{-1, -1,  1, -1, -1,  1, -1, -1,  1, -1,  1,  1, -1, -1,  1, -1,  1, -1,  1,  1, -1, -1,  1, -1,  1,  1,  3,  1,  1, -1,  1,  1}},
    {{-1,  1, -1, -1, -1, -1,  1, -1,  1,  1, -1,  1, -1,  1, -1, -1,  1,  1, -1,  1, -1,  1, -1, -1,  1,  3,  1,  1,  1,  1, -1,  1}},
    {{ 1, -1, -1, -1, -1, -1, -1,  1,  1,  1,  1, -1,  1, -1, -1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  3,  1,  1,  1,  1,  1,  1, -1}},
    {{-1, -1, -1,  1, -1,  1,  1,  1,  1, -1, -1, -1, -1, -1, -1,  1, -1,  1,  1,  1,  1,  1,  1,  3, -1, -1, -1,  1, -1,  1,  1,  1}},
    {{-1, -1,  1, -1,  1, -1,  1,  1, -1,  1, -1, -1, -1, -1,  1, -1,  1, -1,  1,  1,  1,  1,  3,  1, -1, -1,  1, -1,  1, -1,  1,  1}},
    {{-1,  1, -1, -1,  1,  1, -1,  1, -1, -1,  1, -1, -1,  1, -1, -1,  1,  1, -1,  1,  1,  3,  1,  1, -1,  1, -1, -1,  1,  1, -1,  1}},
    {{ 1, -1, -1, -1,  1,  1,  1, -1, -1, -1, -1,  1,  1, -1, -1, -1,  1,  1,  1, -1,  3,  1,  1,  1,  1, -1, -1, -1,  1,  1,  1, -1}},
    {{-1,  1,  1,  1, -1, -1, -1,  1, -1, -1, -1,  1,  1, -1, -1, -1,  1,  1,  1,  3, -1,  1,  1,  1, -1,  1,  1,  1, -1, -1, -1,  1}},
    {{ 1, -1,  1,  1, -1, -1,  1, -1, -1, -1,  1, -1, -1,  1, -1, -1,  1,  1,  3,  1,  1, -1,  1,  1,  1, -1,  1,  1, -1, -1,  1, -1}},
    {{ 1,  1, -1,  1, -1,  1, -1, -1, -1,  1, -1, -1, -1, -1,  1, -1,  1,  3,  1,  1,  1,  1, -1,  1,  1,  1, -1,  1, -1,  1, -1, -1}},
    {{ 1,  1,  1, -1,  1, -1, -1, -1,  1, -1, -1, -1, -1, -1, -1,  1,  3,  1,  1,  1,  1,  1,  1, -1,  1,  1,  1, -1,  1, -1, -1, -1}},
    {{-1, -1, -1,  1, -1,  1,  1,  1, -1,  1,  1,  1,  1,  1,  1,  3,  1, -1, -1, -1, -1, -1, -1,  1, -1, -1, -1,  1, -1,  1,  1,  1}},
    {{-1, -1,  1, -1,  1, -1,  1,  1,  1, -1,  1,  1,  1,  1,  3,  1, -1,  1, -1, -1, -1, -1,  1, -1, -1, -1,  1, -1,  1, -1,  1,  1}},
    {{-1,  1, -1, -1,  1,  1, -1,  1,  1,  1, -1,  1,  1,  3,  1,  1, -1, -1,  1, -1, -1,  1, -1, -1, -1,  1, -1, -1,  1,  1, -1,  1}},
    {{ 1, -1, -1, -1,  1,  1,  1, -1,  1,  1,  1, -1,  3,  1,  1,  1, -1, -1, -1,  1,  1, -1, -1, -1,  1, -1, -1, -1,  1,  1,  1, -1}},
    {{-1,  1,  1,  1, -1, -1, -1,  1,  1,  1,  1,  3, -1,  1,  1,  1, -1, -1, -1,  1,  1, -1, -1, -1, -1,  1,  1,  1, -1, -1, -1,  1}},
    {{ 1, -1,  1,  1, -1, -1,  1, -1,  1,  1,  3,  1,  1, -1,  1,  1, -1, -1,  1, -1, -1,  1, -1, -1,  1, -1,  1,  1, -1, -1,  1, -1}},
    {{ 1,  1, -1,  1, -1,  1, -1, -1,  1,  3,  1,  1,  1,  1, -1,  1, -1,  1, -1, -1, -1, -1,  1, -1,  1,  1, -1,  1, -1,  1, -1, -1}},
    {{ 1,  1,  1, -1,  1, -1, -1, -1,  3,  1,  1,  1,  1,  1,  1, -1,  1, -1, -1, -1, -1, -1, -1,  1,  1,  1,  1, -1,  1, -1, -1, -1}},
    {{-1,  1,  1,  1,  1,  1,  1,  3, -1, -1, -1,  1, -1,  1,  1,  1, -1, -1, -1,  1, -1,  1,  1,  1,  1, -1, -1, -1, -1, -1, -1,  1}},
    {{ 1, -1,  1,  1,  1,  1,  3,  1, -1, -1,  1, -1,  1, -1,  1,  1, -1, -1,  1, -1,  1, -1,  1,  1, -1,  1, -1, -1, -1, -1,  1, -1}},
    {{ 1,  1, -1,  1,  1,  3,  1,  1, -1,  1, -1, -1,  1,  1, -1,  1, -1,  1, -1, -1,  1,  1, -1,  1, -1, -1,  1, -1, -1,  1, -1, -1}},
    {{ 1,  1,  1, -1,  3,  1,  1,  1,  1, -1, -1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  1,  1,  1, -1, -1, -1, -1,  1,  1, -1, -1, -1}},
    {{ 1,  1,  1,  3, -1,  1,  1,  1, -1,  1,  1,  1, -1, -1, -1,  1, -1,  1,  1,  1, -1, -1, -1,  1, -1, -1, -1,  1,  1, -1, -1, -1}},
    {{ 1,  1,  3,  1,  1, -1,  1,  1,  1, -1,  1,  1, -1, -1,  1, -1,  1, -1,  1,  1, -1, -1,  1, -1, -1, -1,  1, -1, -1,  1, -1, -1}},
    {{ 1,  3,  1,  1,  1,  1, -1,  1,  1,  1, -1,  1, -1,  1, -1, -1,  1,  1, -1,  1, -1,  1, -1, -1, -1,  1, -1, -1, -1, -1,  1, -1}},
    {{ 3,  1,  1,  1,  1,  1,  1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  1, -1, -1, -1, -1, -1, -1,  1}},
    }};
    return table;
}

inline IntSymMatrix certificate_matrix() {
    const auto& table = certificate_table();
    IntSymMatrix m(32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, table[i][j]);
    return m;
}

}  // namespace capax::fixtures
