#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nodeshift {

/// Tour and edge costs. 64-bit: kroA200-sized instances sum six-digit edge
/// weights over 200 cities, which must not get anywhere near overflow.
using Cost = std::int64_t;

/// Dense symmetric travel-cost matrix with zero diagonal.
///
/// Cities are 0-based everywhere inside the library; 1-based indices exist
/// only at the TSPLIB file and CLI/report boundaries.
struct CostMatrix {
    int n = 0;
    std::vector<Cost> cells;  // row-major, n*n

    Cost at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
    Cost& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }

    static CostMatrix zeros(int n);

    /// Throws std::invalid_argument unless square, symmetric, zero-diagonal
    /// and non-negative.
    void validate() const;
};

/// A closed tour in path representation: the visit order of all n cities.
/// The closing edge back to order.front() is implicit and never stored.
struct Tour {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Tour&) const = default;
};

/// The tour (1, 2, ..., n), stored 0-based. Throws for n < 3.
Tour canonical_tour(int n);

/// std::nullopt when `order` is a permutation of {0..n-1}; otherwise a
/// message naming the duplicated/missing/out-of-range cities (1-based, as
/// everything user-facing).
std::optional<std::string> validate_tour(std::span<const int> order, int n);

/// Cost of the closed tour, implicit closing edge included.
/// Throws std::invalid_argument when the tour is not a permutation of
/// matrix.n cities.
Cost tour_cost(const CostMatrix& matrix, const Tour& tour);

/// Boundary helpers between the internal 0-based form and the 1-based form
/// used by TSPLIB files, reports and the CLI.
Tour tour_from_one_based(const std::vector<int>& order);
std::vector<int> tour_to_one_based(const Tour& tour);

/// "1-4-3-5-2" style rendering used in CSV rows and CLI output.
std::string format_tour(const Tour& tour, char sep = '-');

}  // namespace nodeshift
