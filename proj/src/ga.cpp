#include "ndscape/ga.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "ndscape/errors.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

void GaParams::validate() const {
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ContractError("mutation rate must lie in [0, 1]");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ContractError("crossover rate must lie in [0, 1]");
  if (population < 2 || population % 2 != 0) throw ContractError("population must be even and at least 2");
  if (generations < 0) throw ContractError("generations must be non-negative");
  if (tournament < 1) throw ContractError("tournament size must be at least 1");
  if (runs < 1) throw ContractError("runs must be at least 1");
}

Objective::Objective(const Landscape& landscape)
    : n_bits_(landscape.n_bits()),
      max_fitness_(landscape.max_fitness()),
      eval_([table = landscape.table()](std::uint64_t g) { return table[g]; }) {}

Objective::Objective(const ExtendedLandscape& landscape)
    : n_bits_(landscape.total_bits()),
      max_fitness_(landscape.max_fitness()),
      eval_([&landscape](std::uint64_t g) { return landscape.evaluate(g); }) {
  if (n_bits_ > 64) throw ContractError("GA genotypes are limited to 64 bits");
}

namespace {

struct Individual {
  std::uint64_t genotype = 0;
  double fitness = 0.0;
};

std::uint64_t random_genotype(Rng& rng, int n_bits) {
  const std::uint64_t g = rng.next();
  return n_bits == 64 ? g : g & ((std::uint64_t{1} << n_bits) - 1);
}

// Best of `size` uniform picks with replacement; the first drawn wins ties.
const Individual& tournament(const std::vector<Individual>& pop, int size, Rng& rng) {
  const Individual* best = &pop[rng.below(pop.size())];
  for (int k = 1; k < size; ++k) {
    const Individual& c = pop[rng.below(pop.size())];
    if (c.fitness > best->fitness) best = &c;
  }
  return *best;
}

}  // namespace

GaOutcome ga_run(const Objective& objective, const GaParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);
  const int n = objective.n_bits();
  const double target = objective.max_fitness();
  GaOutcome out;
  out.best_fitness = -std::numeric_limits<double>::infinity();

  auto evaluate = [&](Individual& ind, int generation) {
    ind.fitness = objective(ind.genotype);
    ++out.evaluations;
    if (ind.fitness > out.best_fitness) out.best_fitness = ind.fitness;
    if (!out.success && ind.fitness == target) {
      out.success = true;
      out.success_generation = generation;
    }
  };

  const auto size = static_cast<std::size_t>(params.population);
  std::vector<Individual> pop(size), next(size);
  for (auto& ind : pop) {
    ind.genotype = random_genotype(rng, n);
    evaluate(ind, 0);
  }

  for (int gen = 1; gen <= params.generations; ++gen) {
    for (std::size_t k = 0; k < size; k += 2) {
      std::uint64_t a = tournament(pop, params.tournament, rng).genotype;
      std::uint64_t b = tournament(pop, params.tournament, rng).genotype;
      if (n > 1 && rng.bernoulli(params.crossover_rate)) {
        const int cut = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        const std::uint64_t low = (std::uint64_t{1} << cut) - 1;
        const std::uint64_t ca = (a & low) | (b & ~low);
        const std::uint64_t cb = (b & low) | (a & ~low);
        a = ca;
        b = cb;
      }
      if (rng.bernoulli(params.mutation_rate)) a ^= std::uint64_t{1} << rng.below(static_cast<std::uint64_t>(n));
      if (rng.bernoulli(params.mutation_rate)) b ^= std::uint64_t{1} << rng.below(static_cast<std::uint64_t>(n));
      next[k].genotype = a;
      next[k + 1].genotype = b;
      evaluate(next[k], gen);
      evaluate(next[k + 1], gen);
    }
    if (params.elitism) {
      const auto elite = std::max_element(pop.begin(), pop.end(),
                                          [](const auto& x, const auto& y) { return x.fitness < y.fitness; });
      const auto worst = std::min_element(next.begin(), next.end(),
                                          [](const auto& x, const auto& y) { return x.fitness < y.fitness; });
      if (elite->fitness > worst->fitness) *worst = *elite;
    }
    pop.swap(next);
  }
  return out;
}

SuccessRate success_rate(const Objective& objective, const GaParams& params, std::uint64_t base_seed,
                         unsigned jobs) {
  params.validate();
  const auto runs = static_cast<std::uint64_t>(params.runs);
  std::atomic<std::uint64_t> next_run{0};
  std::atomic<std::uint64_t> successes{0};
  auto worker = [&] {
    for (std::uint64_t i = next_run++; i < runs; i = next_run++)
      if (ga_run(objective, params, base_seed ^ i).success) ++successes;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(runs)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  SuccessRate out;
  out.runs = runs;
  out.successes = successes.load();
  out.rate = static_cast<double>(out.successes) / static_cast<double>(runs);
  out.half_width = 1.96 * std::sqrt(out.rate * (1.0 - out.rate) / static_cast<double>(runs));
  return out;
}

}  // namespace ndl
