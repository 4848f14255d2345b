#include "nodeshift/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "nodeshift/heuristics.hpp"

namespace nodeshift {

const char* to_string(Seeding seeding) {
    return seeding == Seeding::nn ? "NN" : "RAND";
}

void GaConfig::validate() const {
    if (population_size < 2) {
        throw std::invalid_argument("ga config: population_size must be at least 2");
    }
    if (iterations < 1) {
        throw std::invalid_argument("ga config: iterations must be positive");
    }
    if (mutation_chance < 0.0 || mutation_chance > 1.0) {
        throw std::invalid_argument("ga config: mutation_chance outside [0, 1]");
    }
    if (elitism_count < 1 || elitism_count >= population_size) {
        throw std::invalid_argument(
            "ga config: elitism_count must be in [1, population_size)");
    }
    if (tournament_size < 1 || tournament_size > population_size) {
        throw std::invalid_argument(
            "ga config: tournament_size must be in [1, population_size]");
    }
}

namespace {

Genotype pr_splice(const Genotype& prefix_parent, const Genotype& order_parent, int cut) {
    const int n = static_cast<int>(prefix_parent.size());
    Genotype child(prefix_parent.begin(), prefix_parent.begin() + cut);
    child.reserve(n);
    std::vector<bool> used(n, false);
    for (int k = 0; k < cut; ++k) used[prefix_parent[k]] = true;
    for (int city : order_parent) {
        if (!used[city]) child.push_back(city);
    }
    return child;
}

}  // namespace

std::pair<Genotype, Genotype> one_point_crossover(const Genotype& a, const Genotype& b,
                                                  int cut, Encoding encoding) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("one_point_crossover: parent lengths differ");
    }
    const int len = static_cast<int>(a.size());
    if (cut < 1 || cut >= len) {
        throw std::invalid_argument("one_point_crossover: cut " + std::to_string(cut) +
                                    " outside [1, " + std::to_string(len - 1) + "]");
    }

    if (encoding == Encoding::pr) {
        return {pr_splice(a, b, cut), pr_splice(b, a, cut)};
    }
    Genotype c1(a.begin(), a.begin() + cut);
    c1.insert(c1.end(), b.begin() + cut, b.end());
    Genotype c2(b.begin(), b.begin() + cut);
    c2.insert(c2.end(), a.begin() + cut, a.end());
    return {std::move(c1), std::move(c2)};
}

void mutate(Genotype& genotype, double mutation_chance, Rng& rng,
            const EncodingAdapter& adapter) {
    if (adapter.kind() == Encoding::pr) {
        const int n = static_cast<int>(genotype.size());
        for (int i = 0; i < n; ++i) {
            if (!rng.chance(mutation_chance)) continue;
            int j = rng.uniform_int(0, n - 2);
            if (j >= i) ++j;  // uniform over the other n-1 positions
            std::swap(genotype[i], genotype[j]);
        }
        return;
    }
    const int hi = adapter.gene_max();
    for (int& gene : genotype) {
        if (rng.chance(mutation_chance)) gene = rng.uniform_int(0, hi);
    }
}

int tournament_select(std::span<const Cost> fitness, int tournament_size, Rng& rng) {
    if (fitness.empty()) throw std::invalid_argument("tournament_select: empty population");
    const int size = static_cast<int>(fitness.size());
    if (tournament_size < 1 || tournament_size > size) {
        throw std::invalid_argument("tournament_select: tournament_size outside [1, " +
                                    std::to_string(size) + "]");
    }

    // Sample the tournament without replacement (partial Fisher-Yates), so a
    // full-size tournament always sees -- and returns -- the global best.
    std::vector<int> pool(size);
    std::iota(pool.begin(), pool.end(), 0);
    int best = -1;
    for (int round = 0; round < tournament_size; ++round) {
        const int pick = rng.uniform_int(round, size - 1);
        std::swap(pool[round], pool[pick]);
        const int candidate = pool[round];
        if (best < 0 || fitness[candidate] < fitness[best] ||
            (fitness[candidate] == fitness[best] && candidate < best)) {
            best = candidate;
        }
    }
    return best;
}

RunRecord evolve(const CostMatrix& matrix, const EncodingAdapter& adapter,
                 const GaConfig& config) {
    config.validate();
    if (adapter.n() != matrix.n) {
        throw std::invalid_argument("evolve: adapter is for n=" + std::to_string(adapter.n()) +
                                    ", matrix has n=" + std::to_string(matrix.n));
    }

    const auto started = std::chrono::steady_clock::now();
    Rng rng(config.rng_seed);
    const int pop_size = config.population_size;
    const int genes = adapter.genotype_length();

    std::vector<Genotype> population;
    population.reserve(pop_size);
    if (config.seeding == Seeding::nn) {
        population.push_back(adapter.seed_genotype(best_nn_tour(matrix)));
    }
    while (static_cast<int>(population.size()) < pop_size) {
        population.push_back(adapter.random_genotype(rng));
    }

    std::vector<Cost> fitness(pop_size);
    auto evaluate_all = [&] {
        for (int i = 0; i < pop_size; ++i) {
            fitness[i] = tour_cost(matrix, adapter.decode(population[i]));
        }
    };
    auto best_index = [&] {
        int best = 0;
        for (int i = 1; i < pop_size; ++i) {
            if (fitness[i] < fitness[best]) best = i;
        }
        return best;
    };

    evaluate_all();

    RunRecord record;
    record.config = config;
    record.encoding = adapter.kind();
    record.reference_tour = adapter.reference_tour();
    record.best_cost_per_generation.reserve(config.iterations + 1);
    record.best_cost_per_generation.push_back(fitness[best_index()]);

    std::vector<int> ranking(pop_size);
    std::vector<Genotype> next;
    next.reserve(pop_size);

    for (int generation = 0; generation < config.iterations; ++generation) {
        std::iota(ranking.begin(), ranking.end(), 0);
        std::partial_sort(ranking.begin(), ranking.begin() + config.elitism_count,
                          ranking.end(), [&](int lhs, int rhs) {
                              return fitness[lhs] != fitness[rhs] ? fitness[lhs] < fitness[rhs]
                                                                  : lhs < rhs;
                          });

        next.clear();
        for (int e = 0; e < config.elitism_count; ++e) {
            next.push_back(population[ranking[e]]);
        }
        while (static_cast<int>(next.size()) < pop_size) {
            const int pa = tournament_select(fitness, config.tournament_size, rng);
            const int pb = tournament_select(fitness, config.tournament_size, rng);
            const int cut = rng.uniform_int(1, genes - 1);
            auto [child1, child2] =
                one_point_crossover(population[pa], population[pb], cut, adapter.kind());
            mutate(child1, config.mutation_chance, rng, adapter);
            mutate(child2, config.mutation_chance, rng, adapter);
            next.push_back(std::move(child1));
            if (static_cast<int>(next.size()) < pop_size) {
                next.push_back(std::move(child2));
            }
        }

        population.swap(next);
        evaluate_all();
        record.best_cost_per_generation.push_back(fitness[best_index()]);
    }

    const int winner = best_index();
    record.final_best_cost = fitness[winner];
    record.final_best_tour = adapter.decode(population[winner]);
    record.wall_clock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    return record;
}

}  // namespace nodeshift
