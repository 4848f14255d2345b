#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nodeshift/encodings.hpp"
#include "nodeshift/tour.hpp"

namespace nodeshift {

/// Initial-population policy: all random, or the best nearest-neighbour
/// tour injected as one individual (the rest random).
enum class Seeding { rand, nn };

const char* to_string(Seeding seeding);

struct GaConfig {
    int population_size = 100;
    int iterations = 500;          // generations
    double mutation_chance = 0.03; // per gene (per position for PR)
    int elitism_count = 1;
    int tournament_size = 2;
    Seeding seeding = Seeding::rand;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument when any bound is violated.
    void validate() const;
};

/// Everything one GA run produced, enough to reproduce and report it.
struct RunRecord {
    /// Entry 0 is the initial population's best; one entry per generation
    /// after that. Non-increasing under elitism.
    std::vector<Cost> best_cost_per_generation;
    Tour final_best_tour;
    Cost final_best_cost = 0;
    std::int64_t wall_clock_ms = 0;
    GaConfig config;
    Encoding encoding = Encoding::nse;
    Tour reference_tour;
};

/// One-point crossover at `cut` (1 <= cut < length). NSE/DC children splice
/// prefix and suffix directly -- any spliced vector is in-bounds, which is
/// the point of those encodings. PR children keep one parent's prefix and
/// append the remaining cities in the order the other parent visits them,
/// so both stay permutations.
std::pair<Genotype, Genotype> one_point_crossover(const Genotype& a, const Genotype& b,
                                                  int cut, Encoding encoding);

/// Simple mutation, in place. NSE/DC: each gene is independently redrawn
/// uniformly within bounds with probability mutation_chance. PR: each
/// position, with that probability, swaps with a uniformly chosen other
/// position.
void mutate(Genotype& genotype, double mutation_chance, Rng& rng,
            const EncodingAdapter& adapter);

/// Index of the cheapest individual in a tournament of tournament_size
/// distinct contestants drawn uniformly (without replacement, so a full-size
/// tournament always returns the global best); cost ties keep the lowest
/// population index.
int tournament_select(std::span<const Cost> fitness, int tournament_size, Rng& rng);

/// Elitist generational GA: fitness is the raw decoded tour cost, the
/// elitism_count best genotypes survive unchanged, the rest of each
/// generation comes from tournament selection, one-point crossover and
/// simple mutation. Deterministic given config.rng_seed. With Seeding::nn
/// the best NN tour is injected as one individual, which for NSE/DC
/// requires the adapter's reference to be that tour (contract violation
/// otherwise).
RunRecord evolve(const CostMatrix& matrix, const EncodingAdapter& adapter,
                 const GaConfig& config);

}  // namespace nodeshift
