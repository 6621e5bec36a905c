#pragma once

// Fitness assignment to neutral networks with a trap function of the
// centroid distance to an anchor network, and the uniform-window family of
// target degree distributions.

#include <cstdint>
#include <string>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

struct TrapParams {
  double b = 0.25;  // basin boundary in [0,1] distance units
  double r = 0.9;   // height of the deceptive optimum at distance 1

  /// Throws ContractError unless 0 < b < 1 and 0 < r <= 1.
  void validate() const;
};

inline constexpr TrapParams kDeceptiveTrap{0.25, 0.9};
inline constexpr TrapParams kEasyTrap{0.75, 0.9};

/// 1 - d/b for d <= b, otherwise r (d - b) / (1 - b). d must lie in [0, 1].
double trap(double d, const TrapParams& params);

/// Weight 1/w on each degree p .. p+w-1, zero elsewhere, over degrees 0..n_bits.
DegreeDistribution window_distribution(int p, int w, int n_bits);

/// L1 distance between two centroids divided by their length.
double centroid_distance(const std::vector<double>& a, const std::vector<double>& b);

inline constexpr double kDefaultTrapNoise = 1e-6;

struct TrapOptions {
  double noise_amplitude = kDefaultTrapNoise;
  Genotype anchor{0};
};

struct NetworkFitness {
  std::uint32_t network_id = 0;
  std::size_t size = 0;
  double centroid_distance = 0.0;
  double fitness = 0.0;
};

struct TrapAssignment {
  Landscape landscape;
  std::vector<NetworkFitness> networks;  // indexed by network id
  std::vector<std::string> warnings;
};

/// The network holding `options.anchor` gets fitness exactly 1.0; every other
/// network gets trap(centroid distance to the anchor network), plus an
/// independent uniform draw in [0, noise_amplitude) when noise is on. Noise is
/// redrawn until no two adjacent networks share a value and no noisy value
/// reaches 1.0, so the network partition is preserved.
TrapAssignment assign_trap(const Landscape& landscape, const TrapParams& params,
                           const TrapOptions& options, Rng& rng);

}  // namespace ndl
