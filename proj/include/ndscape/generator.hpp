#pragma once

// Exhaustive construction of a landscape whose neutral-degree distribution
// approximates a target.
//
// Genotypes are processed once each, in nondecreasing Hamming distance from a
// random start genotype (ties by ascending genotype value). When a genotype is
// processed it samples a neutral degree n among the degrees it can still
// realize, grants its fitness to enough unaffected neighbours to reach exactly
// n neutral neighbours, and forbids its fitness on the remaining unaffected
// neighbours. From then on its degree is frozen. An unaffected genotype may
// either start a fresh value or join the value of an affected neighbour. Values
// only spread between neighbours, so each value spans exactly one neutral
// network.

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

/// Samples a degree from `weights` restricted to `feasible`. Negative weights
/// count as zero; when no feasible degree has positive weight the draw is
/// uniform over `feasible`. Throws ContractError when `feasible` is empty.
int roulette_wheel(std::span<const double> weights, std::span<const int> feasible, Rng& rng);

/// Inclusive degree interval [lo, hi].
struct DegreeRange {
  int lo = 0;
  int hi = 0;

  bool contains(int d) const noexcept { return d >= lo && d <= hi; }
  std::vector<int> degrees() const;

  friend bool operator==(DegreeRange, DegreeRange) = default;
};

struct FreezeRecord {
  Genotype genotype;
  int degree = 0;
};

/// Mutable state of one construction run. Fitness values are referred to by
/// dense ids while the landscape is being built.
class GenerationState {
 public:
  static constexpr std::uint32_t kUnaffected = static_cast<std::uint32_t>(-1);

  GenerationState(int n_bits, const DegreeDistribution& target);

  int n_bits() const noexcept { return n_bits_; }
  std::size_t size() const noexcept { return value_of_.size(); }

  bool affected(Genotype g) const { return value_of_[g.value] != kUnaffected; }
  bool frozen(Genotype g) const { return frozen_[g.value] != 0; }
  std::uint32_t value_id(Genotype g) const { return value_of_[g.value]; }
  double value(std::uint32_t id) const { return values_[id]; }
  bool is_forbidden(Genotype g, std::uint32_t id) const;

  /// Budget weights: the target minus 1/2^N for every degree drawn so far.
  std::span<const double> budget() const noexcept { return budget_; }

  /// Registers a fitness value; throws ContractError if it is already in use.
  std::uint32_t add_value(double fitness);

  /// Draws a fresh value uniformly from [0, 1), rejecting any value in use.
  std::uint32_t fresh_value(Rng& rng);

  void assign(Genotype g, std::uint32_t id);
  void forbid(Genotype g, std::uint32_t id);

  /// A value `s` may end up with and the degrees it can realize with it:
  /// [a, a + u] with a the neighbours already holding the value and u the
  /// unaffected neighbours that may still receive it.
  struct ValueOption {
    std::uint32_t id = kUnaffected;  // kUnaffected stands for a fresh value
    DegreeRange degrees;
  };

  /// An affected genotype keeps its value. An unaffected one may take a fresh
  /// value or the value of any affected neighbour not forbidden to it.
  std::vector<ValueOption> value_options(Genotype s) const;

  /// Union of the degree ranges of value_options(s), ascending.
  std::vector<int> feasible_degrees(Genotype s) const;

  /// Processes one genotype: samples a degree among the feasible ones, picks
  /// uniformly among the value options realizing it, grants the value to as
  /// many open neighbours as needed, forbids it on the rest and freezes the
  /// genotype. Returns the degree.
  int process(Genotype s, Rng& rng);

  /// Fresh values for anything left unaffected, then the final table.
  Landscape finish(Rng& rng);

 private:
  int n_bits_;
  std::vector<std::uint32_t> value_of_;
  std::vector<double> values_;
  std::unordered_set<double> used_;
  std::vector<std::vector<std::uint32_t>> forbidden_;
  std::vector<std::uint8_t> frozen_;
  std::vector<double> budget_;
  std::vector<std::uint32_t> scratch_open_;

  DegreeRange range_for(Genotype s, std::uint32_t id) const;
};

struct GeneratorOptions {
  /// Permit n_bits above 16 (memory grows as 2^N * N).
  bool allow_large = false;
  /// When set, receives one record per processed genotype in processing order.
  std::vector<FreezeRecord>* log = nullptr;
};

inline constexpr int kDefaultMaxGeneratedBits = 16;

/// Genotypes sorted by Hamming distance from `origin`, ties by value.
std::vector<Genotype> candidate_order(int n_bits, Genotype origin);

Landscape generate_nd(int n_bits, const DegreeDistribution& target, Rng& rng,
                      const GeneratorOptions& options = {});

}  // namespace ndl
