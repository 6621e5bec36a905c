#pragma once

// Bitstring search space, exhaustive landscapes, neutral degrees and neutral
// networks.
//
// A genotype of an N-bit landscape is an integer in [0, 2^N); locus i is bit i
// (least significant bit = locus 0). Neighbourhood is the single bit flip.
// Neutrality is exact: two neighbours are neutral iff their fitness values
// compare equal, never within a tolerance.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ndl {

/// Largest N for which an exhaustive table is stored.
inline constexpr int kMaxStoredBits = 26;

struct Genotype {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Genotype, Genotype) = default;
};

constexpr Genotype flip(Genotype g, int locus) noexcept {
  return Genotype{g.value ^ (std::uint32_t{1} << locus)};
}

constexpr int hamming_weight(Genotype g) noexcept { return std::popcount(g.value); }

constexpr int hamming_distance(Genotype a, Genotype b) noexcept {
  return std::popcount(a.value ^ b.value);
}

/// The n_bits genotypes at Hamming distance 1 from g, ordered by flipped locus.
std::vector<Genotype> neighbors(Genotype g, int n_bits);

/// N-bit landscape with one finite fitness value per genotype.
class Landscape {
 public:
  Landscape(int n_bits, std::vector<double> fitness);

  static Landscape flat(int n_bits, double value);

  int n_bits() const noexcept { return n_bits_; }
  std::size_t size() const noexcept { return fitness_.size(); }

  double fitness(Genotype g) const { return fitness_[g.value]; }
  double operator[](Genotype g) const { return fitness_[g.value]; }
  std::span<const double> table() const noexcept { return fitness_; }

  /// Overwrites one entry; value must be finite.
  void set(Genotype g, double value);

  double max_fitness() const;

  friend bool operator==(const Landscape&, const Landscape&) = default;

 private:
  int n_bits_;
  std::vector<double> fitness_;
};

/// Weights over neutral degrees 0..N.
class DegreeDistribution {
 public:
  /// Requires at least one weight, all finite and non-negative. Normalization
  /// is not enforced here; operations that need it check is_normalized().
  explicit DegreeDistribution(std::vector<double> weights);

  static DegreeDistribution delta(int max_degree, int degree);

  /// Index of the last weight (N for an N-bit landscape).
  int max_degree() const noexcept { return static_cast<int>(weights_.size()) - 1; }
  std::size_t size() const noexcept { return weights_.size(); }

  double operator[](std::size_t degree) const { return weights_[degree]; }
  std::span<const double> weights() const noexcept { return weights_; }

  bool is_normalized(double tolerance = 1e-9) const;

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;

 private:
  std::vector<double> weights_;
};

struct DistributionStats {
  double mean = 0.0;
  double std = 0.0;
};

/// Mean and standard deviation of the degree. Throws ContractError when the
/// weights do not sum to 1 within 1e-9.
DistributionStats distribution_stats(const DegreeDistribution& d);

/// sqrt(sum_i (a[i] - b[i])^2). Throws ContractError on length mismatch.
double rms_distance(const DegreeDistribution& a, const DegreeDistribution& b);

int neutral_degree(const Landscape& landscape, Genotype g);

/// Neutral degree of every genotype, indexed by genotype value.
std::vector<std::uint8_t> neutral_degrees(const Landscape& landscape);

/// Genotype counts per neutral degree (N+1 bins).
std::vector<std::uint64_t> degree_histogram(const Landscape& landscape);

DegreeDistribution degree_distribution(const Landscape& landscape);

/// Turns bin counts over a space of `space_size` genotypes into weights.
DegreeDistribution distribution_from_counts(std::span<const std::uint64_t> counts,
                                            std::uint64_t space_size);

struct NeutralNetwork {
  std::vector<Genotype> members;  // ascending
  double fitness = 0.0;
  std::vector<double> centroid;   // per-locus frequency of allele 1

  std::size_t size() const noexcept { return members.size(); }
};

/// Neutral networks together with the genotype labelling and the network
/// adjacency (a Hamming-1 edge between members of two different networks).
struct NetworkPartition {
  std::vector<NeutralNetwork> networks;              // ordered by smallest member
  std::vector<std::uint32_t> label;                  // genotype -> network index
  std::vector<std::vector<std::uint32_t>> adjacency;  // ascending, per network

  /// True when the two partitions group genotypes identically.
  bool same_grouping(const NetworkPartition& other) const;
};

NetworkPartition partition_networks(const Landscape& landscape);

std::vector<NeutralNetwork> extract_networks(const Landscape& landscape);

}  // namespace ndl
