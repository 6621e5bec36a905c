#pragma once

// Simulated-annealing refinement of a landscape's neutral-degree distribution.
//
// The energy of a landscape is rms_distance(degree_distribution(L), target).
// A move rewrites the fitness of one genotype, which only touches the degrees
// of that genotype and its N neighbours, so the degree histogram and energy
// are maintained incrementally.

#include <cstdint>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

struct AnnealSchedule {
  double initial_temperature = 1e-7;
  double cooling_factor = 0.95;
  std::uint64_t moves_per_epoch = 0;
  std::uint64_t total_moves = 0;

  /// Defaults scaled to the landscape size: 2^N moves per epoch, 64 * 2^N moves.
  static AnnealSchedule defaults(int n_bits);

  /// Throws ContractError unless T > 0, cooling in (0,1), both move counts >= 1.
  void validate() const;
};

struct DegreeChange {
  Genotype genotype;
  int old_degree = 0;
  int new_degree = 0;

  friend bool operator==(const DegreeChange&, const DegreeChange&) = default;
};

/// Degree changes caused by setting genotype s to new_fitness: s first, then
/// affected neighbours in locus order. Empty when nothing changes.
std::vector<DegreeChange> degree_delta(const Landscape& landscape, Genotype s, double new_fitness);

struct TracePoint {
  std::uint64_t move = 0;
  double energy = 0.0;
};

struct AnnealStats {
  double initial_energy = 0.0;
  double final_energy = 0.0;  // energy of the returned landscape
  std::uint64_t accepted = 0;
  std::vector<TracePoint> trace;  // start, then end of every epoch
};

/// Returns the lowest-energy landscape seen during the chain, never one with
/// higher energy than the input.
Landscape refine(const Landscape& landscape, const DegreeDistribution& target,
                 const AnnealSchedule& schedule, Rng& rng, AnnealStats* stats = nullptr);

}  // namespace ndl
