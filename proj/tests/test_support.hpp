#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// re-derive decoder behaviour by literal list manipulation and must stay
// independent of the library's rank-bookkeeping implementation.

#include <vector>

#include "nodeshift/encodings.hpp"
#include "nodeshift/rng.hpp"
#include "nodeshift/tour.hpp"
#include "nodeshift/tsplib.hpp"

namespace testsupport {

using nodeshift::Cost;
using nodeshift::CostMatrix;
using nodeshift::Tour;

/// Moves each gene's city one place at a time: swap with the next city, and
/// from the last position re-enter at position 1 so the head stays fixed.
/// Accepts raw (unreduced) step counts.
inline Tour list_shift_oracle(const Tour& reference, const std::vector<int>& raw_steps) {
    std::vector<int> work = reference.order;
    const int n = static_cast<int>(work.size());
    for (int i = 1; i < n; ++i) {
        const int city = reference.order[i];
        for (int step = 0; step < raw_steps[i - 1]; ++step) {
            int pos = 0;
            while (work[pos] != city) ++pos;
            if (pos == n - 1) {
                work.erase(work.begin() + pos);
                work.insert(work.begin() + 1, city);
            } else {
                std::swap(work[pos], work[pos + 1]);
            }
        }
    }
    return Tour{work};
}

/// Random symmetric integer matrix with zero diagonal, entries in [1, 100].
inline CostMatrix random_matrix(int n, nodeshift::Rng& rng) {
    CostMatrix m = CostMatrix::zeros(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Cost c = rng.uniform_int(1, 100);
            m.at(i, j) = c;
            m.at(j, i) = c;
        }
    }
    return m;
}

/// Random EUC_2D instance on an integer grid.
inline nodeshift::TspInstance random_euc2d_instance(int n, nodeshift::Rng& rng) {
    nodeshift::TspInstance inst;
    inst.name = "random" + std::to_string(n);
    inst.dimension = n;
    inst.edge_weight_kind = nodeshift::EdgeWeightKind::euc_2d;
    for (int i = 0; i < n; ++i) {
        inst.coords.push_back({static_cast<double>(rng.uniform_int(0, 500)),
                               static_cast<double>(rng.uniform_int(0, 500))});
    }
    return inst;
}

/// Random permutation tour over n cities.
inline Tour random_tour(int n, nodeshift::Rng& rng) {
    return Tour{nodeshift::EncodingAdapter::pr(n).random_genotype(rng)};
}

/// The published optimal berlin52 tour (1-based city ids), cost 7542.
inline const std::vector<int>& berlin52_optimal_tour_1based() {
    static const std::vector<int> tour = {
        1,  49, 32, 45, 19, 41, 8,  9,  10, 43, 33, 51, 11, 52, 14, 13, 47, 26,
        27, 28, 12, 25, 4,  6,  15, 5,  24, 48, 38, 37, 40, 39, 36, 35, 34, 44,
        46, 16, 29, 50, 20, 23, 30, 2,  7,  42, 21, 17, 3,  18, 31, 22};
    return tour;
}

/// Minimal well-formed EUC_2D text: the 3-4-5 right triangle.
inline const char* triangle_tsplib() {
    return "NAME : triangle\n"
           "TYPE : TSP\n"
           "DIMENSION : 3\n"
           "EDGE_WEIGHT_TYPE : EUC_2D\n"
           "NODE_COORD_SECTION\n"
           "1 0 0\n"
           "2 3 0\n"
           "3 0 4\n"
           "EOF\n";
}

}  // namespace testsupport
