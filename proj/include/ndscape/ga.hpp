#pragma once

// Generational genetic algorithm used as a difficulty probe.
//
// Each generation builds population/2 child pairs: two independent
// tournaments pick the parents, one-point crossover is applied with
// probability crossover_rate, and each child independently has one uniformly
// chosen bit flipped with probability mutation_rate. Children replace the
// parents wholesale. A run succeeds when any evaluated individual, including
// the initial population, reaches the maximum fitness of the landscape.

#include <cstdint>
#include <functional>

#include "ndscape/core.hpp"
#include "ndscape/extension.hpp"

namespace ndl {

struct GaParams {
  int population = 50;
  int generations = 50;
  double mutation_rate = 0.8;
  double crossover_rate = 0.2;
  int tournament = 3;
  bool elitism = false;
  int runs = 1000;

  /// Throws ContractError on rates outside [0,1], an odd or empty population,
  /// negative generations, tournament < 1 or runs < 1.
  void validate() const;
};

/// Non-owning view of something the GA can evaluate. The viewed landscape
/// must outlive the objective.
class Objective {
 public:
  explicit Objective(const Landscape& landscape);
  explicit Objective(const ExtendedLandscape& landscape);

  int n_bits() const noexcept { return n_bits_; }
  double max_fitness() const noexcept { return max_fitness_; }
  double operator()(std::uint64_t genotype) const { return eval_(genotype); }

 private:
  int n_bits_;
  double max_fitness_;
  std::function<double(std::uint64_t)> eval_;
};

struct GaOutcome {
  bool success = false;
  double best_fitness = 0.0;
  std::uint64_t evaluations = 0;
  int success_generation = -1;  // first generation reaching the maximum
};

GaOutcome ga_run(const Objective& objective, const GaParams& params, std::uint64_t seed);

struct SuccessRate {
  double rate = 0.0;
  double half_width = 0.0;  // 1.96 * sqrt(rate (1 - rate) / runs)
  std::uint64_t successes = 0;
  std::uint64_t runs = 0;
};

/// params.runs independent runs; run i is seeded with base_seed ^ i, so the
/// result does not depend on `jobs`.
SuccessRate success_rate(const Objective& objective, const GaParams& params, std::uint64_t base_seed,
                         unsigned jobs = 1);

}  // namespace ndl
