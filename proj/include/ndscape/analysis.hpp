#pragma once

// Search-difficulty measurements: fitness-distance correlation with the
// Jones classification, fitness/distance scatter data, and neutral-network
// size rankings.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

inline constexpr double kJonesThreshold = 0.15;

enum class Difficulty { deceptive, hard, easy };

std::string_view difficulty_name(Difficulty d) noexcept;

/// deceptive iff fdc >= 0.15, easy iff fdc <= -0.15, hard otherwise.
Difficulty classify_fdc(double fdc) noexcept;

struct FdcReport {
  double fdc = 0.0;
  Difficulty classification = Difficulty::hard;
  std::uint64_t m = 0;
  std::uint64_t optima_count = 0;
};

/// Genotypes whose fitness equals the landscape maximum.
std::vector<Genotype> global_optima(const Landscape& landscape);

/// Minimum Hamming distance from every genotype to the set of maximum-fitness
/// genotypes (multi-source breadth-first search over the hypercube).
std::vector<std::uint8_t> distances_to_optima(const Landscape& landscape);

/// Pearson correlation with 1/m normalization. Throws ContractError ("FDC
/// undefined") when either sequence has zero variance.
double correlation(std::span<const double> fitness, std::span<const double> distance);

/// Exhaustive FDC over all 2^N genotypes.
FdcReport fdc(const Landscape& landscape);

struct ScatterPoint {
  Genotype genotype;
  int distance = 0;
  double fitness = 0.0;
};

/// `sample` distinct genotypes drawn uniformly (all of them when sample = 2^N),
/// in ascending genotype order.
std::vector<ScatterPoint> fdc_scatter(const Landscape& landscape, std::uint64_t sample, Rng& rng);

struct RankEntry {
  std::size_t rank = 0;  // from 1
  std::size_t size = 0;
};

/// Neutral network sizes in nonincreasing order.
std::vector<RankEntry> network_size_ranking(const Landscape& landscape);

}  // namespace ndl
