#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nodeshift/tour.hpp"
#include "nodeshift/tsplib.hpp"

namespace nodeshift {

struct BruteForceResult {
    Tour tour;
    Cost cost = 0;
};

/// Exhaustive ground truth for desk-scale instances. City 1 is fixed first
/// and reversal symmetry halves the space, so n = 12 (the hard guard) means
/// 11!/2 ~ 2e7 tours. Cost ties keep the lexicographically smallest order.
/// Throws std::invalid_argument beyond the guard.
BruteForceResult brute_force_optimum(const CostMatrix& matrix);

/// Shape of the Miller-Tucker-Zemlin integer program for n cities:
/// binary arc variables x_i_j (i != j), continuous order variables u_i with
/// bounds [1, n-1] for i = 2..n, one out- and one in-degree row per city and
/// u_i - u_j + n*x_i_j <= n-1 for all i != j in {2..n}.
struct MtzModel {
    int n = 0;

    int binary_variable_count() const { return n * (n - 1); }
    int order_variable_count() const { return n - 1; }
    int degree_row_count() const { return 2 * n; }
    int subtour_row_count() const { return (n - 1) * (n - 2); }
};

/// Emits the MTZ program as CPLEX-LP-format text (Minimize / Subject To /
/// Bounds / Binary / End) for external MIP solvers, e.g.
/// `glpsol --lp model.lp -o solution.txt`. Variables are named x_i_j and
/// u_i with 1-based city indices.
std::string export_mtz(const TspInstance& instance, const CostMatrix& matrix);

/// Rebuilds the tour from the chosen arcs (0-based (i, j) pairs with
/// x_ij = 1) by following successors from city 1. Throws std::runtime_error
/// naming a violated cycle when the arcs decompose into subtours, and
/// std::invalid_argument when the degree constraints are broken.
Tour tour_from_arc_solution(const std::vector<std::pair<int, int>>& arcs, int n);

/// Objective value and selected arcs pulled out of a `glpsol -o` solution
/// file written for an exported MTZ model.
struct LpSolution {
    double objective = 0;
    std::vector<std::pair<int, int>> arcs;  // 0-based
};

LpSolution parse_glpsol_solution(const std::string& text);

}  // namespace nodeshift
