#include <doctest.h>

#include "nodeshift/exact.hpp"
#include "nodeshift/heuristics.hpp"
#include "nodeshift/tsplib.hpp"
#include "test_support.hpp"

using namespace nodeshift;
using testsupport::random_matrix;

namespace {
const std::string data_dir = NODESHIFT_DATA_DIR;
}

TEST_CASE("triangle: only one tour shape exists") {
    const CostMatrix m = build_cost_matrix(parse_tsplib(testsupport::triangle_tsplib()));
    const Tour t = nearest_neighbour(m, 0);
    CHECK(t == canonical_tour(3));
    CHECK(tour_cost(m, t) == 12);
    CHECK(tour_cost(m, best_nn_tour(m)) == 12);
}

TEST_CASE("greedy walks the line") {
    TspInstance inst;
    inst.dimension = 4;
    inst.edge_weight_kind = EdgeWeightKind::euc_2d;
    inst.coords = {{0, 0}, {1, 0}, {2, 0}, {10, 0}};
    const CostMatrix m = build_cost_matrix(inst);

    const Tour t = nearest_neighbour(m, 0);
    CHECK(t == canonical_tour(4));
    CHECK(tour_cost(m, t) == 20);  // 1 + 1 + 8 + 10
}

TEST_CASE("cost ties break towards the smaller city index") {
    // City 1 sees cities 2 and 3 at the same distance.
    CostMatrix m = CostMatrix::zeros(4);
    auto set = [&](int i, int j, Cost c) { m.at(i, j) = m.at(j, i) = c; };
    set(0, 1, 5);
    set(0, 2, 5);
    set(0, 3, 9);
    set(1, 2, 7);
    set(1, 3, 4);
    set(2, 3, 6);
    const Tour t = nearest_neighbour(m, 0);
    CHECK(t.order[1] == 1);
}

TEST_CASE("best_nn_tour minimizes over all starts") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(4, 12);
        const CostMatrix m = random_matrix(n, rng);
        const Cost best = tour_cost(m, best_nn_tour(m));
        CHECK(best <= tour_cost(m, nearest_neighbour(m, 0)));
        for (int start = 0; start < n; ++start) {
            CHECK(best <= tour_cost(m, nearest_neighbour(m, start)));
        }
    }
}

TEST_CASE("NN never beats the exact optimum") {
    Rng rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.uniform_int(4, 8);
        const CostMatrix m = random_matrix(n, rng);
        CHECK(tour_cost(m, best_nn_tour(m)) >= brute_force_optimum(m).cost);
    }
}

TEST_CASE("NN is deterministic") {
    Rng rng(43);
    const CostMatrix m = random_matrix(9, rng);
    CHECK(best_nn_tour(m) == best_nn_tour(m));
    CHECK(nearest_neighbour(m, 4) == nearest_neighbour(m, 4));
}

TEST_CASE("invalid start city throws") {
    Rng rng(44);
    const CostMatrix m = random_matrix(5, rng);
    CHECK_THROWS_AS(nearest_neighbour(m, -1), std::invalid_argument);
    CHECK_THROWS_AS(nearest_neighbour(m, 5), std::invalid_argument);
}

TEST_CASE("frozen NN costs on the bundled benchmarks") {
    const CostMatrix berlin = build_cost_matrix(read_tsplib_file(data_dir + "/berlin52.tsp"));
    const Cost berlin_nn = tour_cost(berlin, best_nn_tour(berlin));
    CHECK(berlin_nn == 8181);          // regression fixture
    CHECK(berlin_nn > 7542);           // strictly above the optimum
    CHECK(berlin_nn <= 7542 * 5 / 4);  // classical NN quality on this instance

    const CostMatrix eil = build_cost_matrix(read_tsplib_file(data_dir + "/eil51.tsp"));
    CHECK(tour_cost(eil, best_nn_tour(eil)) == 482);  // regression fixture
}
