#include <doctest.h>

#include <sstream>

#include "nodeshift/exact.hpp"
#include "nodeshift/heuristics.hpp"
#include "test_support.hpp"

using namespace nodeshift;
using testsupport::random_matrix;
using testsupport::random_tour;

TEST_CASE("brute force on the 3-4-5 triangle") {
    const CostMatrix m = build_cost_matrix(parse_tsplib(testsupport::triangle_tsplib()));
    const BruteForceResult result = brute_force_optimum(m);
    CHECK(result.cost == 12);
    CHECK(result.tour == canonical_tour(3));
}

TEST_CASE("brute force walks the square perimeter") {
    TspInstance inst;
    inst.dimension = 4;
    inst.edge_weight_kind = EdgeWeightKind::ceil_2d;  // diagonal 2, side 1
    inst.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const BruteForceResult result = brute_force_optimum(build_cost_matrix(inst));
    CHECK(result.cost == 4);
    CHECK(result.tour == canonical_tour(4));
}

TEST_CASE("brute force dominates random tours") {
    Rng rng(71);
    const CostMatrix m = random_matrix(9, rng);
    const BruteForceResult result = brute_force_optimum(m);
    for (int trial = 0; trial < 1000; ++trial) {
        CHECK(result.cost <= tour_cost(m, random_tour(9, rng)));
    }
    CHECK(result.cost == tour_cost(m, result.tour));
}

TEST_CASE("brute force tie-break is the lexicographically smallest tour") {
    const CostMatrix zero = CostMatrix::zeros(5);
    CHECK(brute_force_optimum(zero).tour == canonical_tour(5));
}

TEST_CASE("brute force refuses large instances") {
    const CostMatrix m = CostMatrix::zeros(13);
    CHECK_THROWS_WITH_AS(brute_force_optimum(m), doctest::Contains("n=13"),
                         std::invalid_argument);
}

namespace {

struct LpShape {
    int binary_vars = 0;
    int u_bounds = 0;
    int degree_rows = 0;
    int mtz_rows = 0;
};

LpShape analyze_lp(const std::string& text) {
    LpShape shape;
    std::istringstream in(text);
    std::string line;
    bool in_binary = false;
    while (std::getline(in, line)) {
        if (line == "Binary") {
            in_binary = true;
            continue;
        }
        if (line == "End") in_binary = false;
        if (in_binary && line.find("x_") != std::string::npos) ++shape.binary_vars;
        if (line.find("<= u_") != std::string::npos) ++shape.u_bounds;
        if (line.rfind(" out_", 0) == 0 || line.rfind(" in_", 0) == 0) ++shape.degree_rows;
        if (line.rfind(" mtz_", 0) == 0) ++shape.mtz_rows;
    }
    return shape;
}

}  // namespace

TEST_CASE("exported MTZ model has the exact shape") {
    Rng rng(72);
    for (int n = 3; n <= 10; ++n) {
        TspInstance inst = testsupport::random_euc2d_instance(n, rng);
        const CostMatrix m = build_cost_matrix(inst);
        const MtzModel model{n};
        const LpShape shape = analyze_lp(export_mtz(inst, m));
        CHECK(shape.binary_vars == model.binary_variable_count());  // n(n-1)
        CHECK(shape.u_bounds == model.order_variable_count());      // n-1
        CHECK(shape.degree_rows == model.degree_row_count());       // 2n
        CHECK(shape.mtz_rows == model.subtour_row_count());         // (n-1)(n-2)
    }
}

TEST_CASE("exported objective carries the matrix coefficients") {
    Rng rng(73);
    const TspInstance inst = testsupport::random_euc2d_instance(5, rng);
    const CostMatrix m = build_cost_matrix(inst);
    const std::string lp = export_mtz(inst, m);

    // Pull "<coefficient> x_<i>_<j>" pairs out of the objective section.
    const std::string objective =
        lp.substr(lp.find("obj:"), lp.find("Subject To") - lp.find("obj:"));
    std::istringstream tokens(objective);
    std::string token;
    Cost coefficient = 0;
    bool have_coefficient = false;
    int seen = 0;
    while (tokens >> token) {
        int i = 0, j = 0;
        if (std::sscanf(token.c_str(), "x_%d_%d", &i, &j) == 2) {
            REQUIRE(have_coefficient);
            CHECK(coefficient == m.at(i - 1, j - 1));
            have_coefficient = false;
            ++seen;
        } else {
            try {
                coefficient = std::stoll(token);
                have_coefficient = true;
            } catch (const std::exception&) {
                have_coefficient = false;  // "obj:", "+"
            }
        }
    }
    CHECK(seen == 20);  // n(n-1) terms
}

TEST_CASE("LP text uses the CPLEX-LP section structure") {
    Rng rng(74);
    const TspInstance inst = testsupport::random_euc2d_instance(4, rng);
    const std::string lp = export_mtz(inst, build_cost_matrix(inst));
    CHECK(lp.find("Minimize") != std::string::npos);
    CHECK(lp.find("Subject To") != std::string::npos);
    CHECK(lp.find("Bounds") != std::string::npos);
    CHECK(lp.find("Binary") != std::string::npos);
    CHECK(lp.rfind("End\n") == lp.size() - 4);
}

TEST_CASE("tours are rebuilt from arc solutions") {
    SUBCASE("a 3-cycle") {
        const Tour t = tour_from_arc_solution({{0, 1}, {1, 2}, {2, 0}}, 3);
        CHECK(t == canonical_tour(3));
    }
    SUBCASE("a less trivial cycle") {
        // 1 -> 4 -> 3 -> 5 -> 2 -> 1 (1-based)
        const Tour t = tour_from_arc_solution({{0, 3}, {3, 2}, {2, 4}, {4, 1}, {1, 0}}, 5);
        CHECK(t == tour_from_one_based({1, 4, 3, 5, 2}));
    }
    SUBCASE("two 2-cycles name the violated cycle") {
        CHECK_THROWS_WITH_AS(
            tour_from_arc_solution({{0, 1}, {1, 0}, {2, 3}, {3, 2}}, 4),
            doctest::Contains("cycle (1, 2)"), std::runtime_error);
    }
    SUBCASE("degree violations are named") {
        CHECK_THROWS_WITH_AS(tour_from_arc_solution({{0, 1}, {1, 2}}, 3),
                             doctest::Contains("no outgoing arc"), std::invalid_argument);
        CHECK_THROWS_AS(tour_from_arc_solution({{0, 1}, {0, 2}, {1, 0}, {2, 0}}, 3),
                        std::invalid_argument);
    }
}

TEST_CASE("glpsol solution files are parsed") {
    const std::string sample =
        "Problem:    triangle\n"
        "Rows:       9\n"
        "Columns:    8 (6 integer, 6 binary)\n"
        "Status:     INTEGER OPTIMAL\n"
        "Objective:  obj = 12 (MINimum)\n"
        "\n"
        "   No.   Row name        Activity     Lower bound   Upper bound\n"
        "------ ------------    ------------- ------------- -------------\n"
        "     1 out_1                       1             1             =\n"
        "\n"
        "   No. Column name       Activity     Lower bound   Upper bound\n"
        "------ ------------    ------------- ------------- -------------\n"
        "     1 x_1_2        *              1             0             1\n"
        "     2 x_1_3        *              0             0             1\n"
        "     3 x_2_1        *              0             0             1\n"
        "     4 x_2_3        *              1             0             1\n"
        "     5 x_3_1        *              1             0             1\n"
        "     6 x_3_2        *              0             0             1\n"
        "     7 u_2                         1             1             2\n"
        "     8 u_3                         2             1             2\n"
        "\n"
        "End of output\n";

    const LpSolution solution = parse_glpsol_solution(sample);
    CHECK(solution.objective == 12.0);
    REQUIRE(solution.arcs.size() == 3);
    const Tour t = tour_from_arc_solution(solution.arcs, 3);
    CHECK(t == canonical_tour(3));

    CHECK_THROWS_AS(parse_glpsol_solution("no objective here\n"), std::runtime_error);
}
