#include <doctest.h>

#include <map>

#include "nodeshift/exact.hpp"
#include "nodeshift/ga.hpp"
#include "nodeshift/heuristics.hpp"
#include "test_support.hpp"

using namespace nodeshift;
using testsupport::random_matrix;
using testsupport::random_tour;

TEST_CASE("one-point crossover splices bounded genotypes") {
    const Genotype a = {2, 1, 2, 1};
    const Genotype b = {0, 0, 0, 0};
    const auto [c1, c2] = one_point_crossover(a, b, 2, Encoding::nse);
    CHECK(c1 == Genotype{2, 1, 0, 0});
    CHECK(c2 == Genotype{0, 0, 2, 1});
}

TEST_CASE("one-point crossover repairs permutations") {
    const Genotype a = tour_from_one_based({1, 2, 3, 4, 5}).order;
    const Genotype b = tour_from_one_based({1, 4, 3, 5, 2}).order;
    const auto [c1, c2] = one_point_crossover(a, b, 2, Encoding::pr);
    CHECK(c1 == tour_from_one_based({1, 2, 4, 3, 5}).order);
    CHECK(c2 == tour_from_one_based({1, 4, 2, 3, 5}).order);
}

TEST_CASE("crossover rejects bad cuts and mismatched parents") {
    const Genotype a = {1, 2, 3};
    const Genotype b = {4, 5, 6};
    CHECK_THROWS_AS(one_point_crossover(a, b, 0, Encoding::nse), std::invalid_argument);
    CHECK_THROWS_AS(one_point_crossover(a, b, 3, Encoding::nse), std::invalid_argument);
    CHECK_THROWS_AS(one_point_crossover(a, Genotype{1, 2}, 1, Encoding::nse),
                    std::invalid_argument);
}

TEST_CASE("crossover children always satisfy the genotype contract") {
    Rng rng(51);
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = rng.uniform_int(4, 12);
        const Tour ref = random_tour(n, rng);
        for (const EncodingAdapter& adapter :
             {EncodingAdapter::nse(ref), EncodingAdapter::dc(ref),
              EncodingAdapter::pr(n)}) {
            const Genotype a = adapter.random_genotype(rng);
            const Genotype b = adapter.random_genotype(rng);
            const int cut = rng.uniform_int(1, adapter.genotype_length() - 1);
            const auto [c1, c2] = one_point_crossover(a, b, cut, adapter.kind());
            // decode() enforces the full genotype contract
            CHECK_NOTHROW(adapter.decode(c1));
            CHECK_NOTHROW(adapter.decode(c2));
        }
    }
}

TEST_CASE("mutation respects chance and bounds") {
    Rng rng(52);
    const Tour ref = random_tour(9, rng);

    SUBCASE("chance 0 leaves the genotype unchanged") {
        for (const EncodingAdapter& adapter :
             {EncodingAdapter::nse(ref), EncodingAdapter::dc(ref),
              EncodingAdapter::pr(9)}) {
            Genotype g = adapter.random_genotype(rng);
            const Genotype before = g;
            mutate(g, 0.0, rng, adapter);
            CHECK(g == before);
        }
    }
    SUBCASE("chance 1 keeps NSE/DC genes in bounds") {
        for (const EncodingAdapter& adapter :
             {EncodingAdapter::nse(ref), EncodingAdapter::dc(ref)}) {
            Genotype g = adapter.random_genotype(rng);
            mutate(g, 1.0, rng, adapter);
            for (int gene : g) {
                CHECK(gene >= 0);
                CHECK(gene <= adapter.gene_max());
            }
        }
    }
    SUBCASE("PR mutation keeps permutations") {
        const EncodingAdapter pr = EncodingAdapter::pr(9);
        for (int trial = 0; trial < 10000; ++trial) {
            Genotype g = pr.random_genotype(rng);
            mutate(g, 0.5, rng, pr);
            CHECK(!validate_tour(g, 9).has_value());
        }
    }
}

TEST_CASE("tournament selection") {
    const std::vector<Cost> fitness = {50, 10, 30, 20};

    SUBCASE("full-size tournaments always pick the global best") {
        Rng rng(53);
        for (int trial = 0; trial < 200; ++trial) {
            CHECK(tournament_select(fitness, 4, rng) == 1);
        }
    }
    SUBCASE("size-1 tournaments are uniform draws") {
        Rng rng(54);
        std::map<int, int> hits;
        for (int trial = 0; trial < 4000; ++trial) {
            hits[tournament_select(fitness, 1, rng)]++;
        }
        for (int i = 0; i < 4; ++i) CHECK(hits[i] > 700);  // ~1000 each
    }
    SUBCASE("the best individual is selected at least as often as any other") {
        Rng rng(55);
        std::map<int, int> hits;
        for (int trial = 0; trial < 10000; ++trial) {
            hits[tournament_select(fitness, 2, rng)]++;
        }
        for (int i = 0; i < 4; ++i) CHECK(hits[1] >= hits[i]);
    }
    SUBCASE("fitness ties keep the lowest population index") {
        Rng rng(56);
        const std::vector<Cost> flat = {9, 9, 9, 9, 9};
        for (int trial = 0; trial < 100; ++trial) {
            CHECK(tournament_select(flat, 5, rng) == 0);
        }
    }
    SUBCASE("empty population and oversized tournaments throw") {
        Rng rng(57);
        CHECK_THROWS_AS(tournament_select(std::vector<Cost>{}, 2, rng),
                        std::invalid_argument);
        CHECK_THROWS_AS(tournament_select(fitness, 5, rng), std::invalid_argument);
    }
}

TEST_CASE("config validation") {
    GaConfig config;
    CHECK_NOTHROW(config.validate());
    GaConfig bad = config;
    bad.mutation_chance = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = config;
    bad.elitism_count = config.population_size;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = config;
    bad.tournament_size = config.population_size + 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = config;
    bad.iterations = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("evolve finds the optimum on a tiny landscape") {
    Rng rng(57);
    const CostMatrix m = random_matrix(5, rng);
    const Cost optimum = brute_force_optimum(m).cost;

    GaConfig config;
    config.population_size = 50;
    config.iterations = 200;
    config.mutation_chance = 0.05;
    config.rng_seed = 99;

    const EncodingAdapter adapter = EncodingAdapter::nse(canonical_tour(5));
    const RunRecord record = evolve(m, adapter, config);
    CHECK(record.final_best_cost == optimum);
}

TEST_CASE("run records are internally consistent") {
    Rng rng(58);
    const CostMatrix m = random_matrix(10, rng);
    GaConfig config;
    config.population_size = 30;
    config.iterations = 60;
    config.mutation_chance = 0.05;
    config.rng_seed = 4242;

    for (const EncodingAdapter& adapter :
         {EncodingAdapter::nse(canonical_tour(10)), EncodingAdapter::dc(canonical_tour(10)),
          EncodingAdapter::pr(10)}) {
        const RunRecord record = evolve(m, adapter, config);

        REQUIRE(record.best_cost_per_generation.size() ==
                static_cast<std::size_t>(config.iterations) + 1);
        for (std::size_t g = 1; g < record.best_cost_per_generation.size(); ++g) {
            CHECK(record.best_cost_per_generation[g] <=
                  record.best_cost_per_generation[g - 1]);
        }
        CHECK(record.final_best_cost == record.best_cost_per_generation.back());
        CHECK(record.final_best_cost == tour_cost(m, record.final_best_tour));
        CHECK(record.encoding == adapter.kind());
    }
}

TEST_CASE("same seed, same record") {
    Rng rng(59);
    const CostMatrix m = random_matrix(8, rng);
    GaConfig config;
    config.population_size = 20;
    config.iterations = 40;
    config.mutation_chance = 0.1;
    config.rng_seed = 1234;

    const EncodingAdapter adapter = EncodingAdapter::dc(canonical_tour(8));
    const RunRecord a = evolve(m, adapter, config);
    const RunRecord b = evolve(m, adapter, config);
    CHECK(a.best_cost_per_generation == b.best_cost_per_generation);
    CHECK(a.final_best_tour == b.final_best_tour);
    CHECK(a.final_best_cost == b.final_best_cost);

    config.rng_seed = 4321;
    const RunRecord c = evolve(m, adapter, config);
    CHECK(c.final_best_cost == tour_cost(m, c.final_best_tour));  // different seed still valid
}

TEST_CASE("NN seeding never ends worse than the NN tour") {
    Rng rng(60);
    for (int trial = 0; trial < 5; ++trial) {
        const CostMatrix m = random_matrix(12, rng);
        const Tour nn = best_nn_tour(m);
        const Cost nn_cost = tour_cost(m, nn);

        GaConfig config;
        config.population_size = 20;
        config.iterations = 30;
        config.mutation_chance = 0.05;
        config.seeding = Seeding::nn;
        config.rng_seed = 1000 + trial;

        for (const EncodingAdapter& adapter :
             {EncodingAdapter::nse(nn), EncodingAdapter::dc(nn), EncodingAdapter::pr(12)}) {
            const RunRecord record = evolve(m, adapter, config);
            CHECK(record.final_best_cost <= nn_cost);
            CHECK(record.best_cost_per_generation.front() <= nn_cost);
        }
    }
}

TEST_CASE("adapter and matrix sizes must agree") {
    Rng rng(61);
    const CostMatrix m = random_matrix(6, rng);
    GaConfig config;
    config.population_size = 10;
    config.iterations = 5;
    CHECK_THROWS_AS(evolve(m, EncodingAdapter::pr(7), config), std::invalid_argument);
}
