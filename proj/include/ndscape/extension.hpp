#pragma once

// Additive extended landscapes: the product of several component search
// spaces, moves that flip one bit of one component, and fitness equal to the
// sum of the component fitnesses. The neutral-degree distribution of the
// product is the convolution of the component distributions, so it is known
// exactly without enumerating the product space.
//
// Genotype layout: component 0 occupies the lowest bits, component 1 the next
// ones, and so on.

#include <cstdint>
#include <vector>

#include "ndscape/core.hpp"

namespace ndl {

/// Largest product space that flatten() will materialize.
inline constexpr int kMaxFlattenBits = 20;

class ExtendedLandscape {
 public:
  explicit ExtendedLandscape(std::vector<Landscape> components);
  ExtendedLandscape(Landscape single);  // NOLINT(google-explicit-constructor)

  const std::vector<Landscape>& components() const noexcept { return components_; }
  int total_bits() const noexcept { return total_bits_; }

  /// Sum of the component fitnesses of g's slices. total_bits must be <= 64.
  double evaluate(std::uint64_t g) const;

  /// Sum of the component maxima.
  double max_fitness() const;

  /// Exhaustive table of the product space; requires total_bits <= 20.
  Landscape flatten() const;

  friend bool operator==(const ExtendedLandscape&, const ExtendedLandscape&) = default;

 private:
  std::vector<Landscape> components_;
  int total_bits_ = 0;
};

ExtendedLandscape extend(const ExtendedLandscape& first, const ExtendedLandscape& second);

/// D(n) = sum_i a(i) b(n - i). Both inputs must be normalized.
DegreeDistribution convolve(const DegreeDistribution& a, const DegreeDistribution& b);

/// Left fold of convolve over the component distributions.
DegreeDistribution extended_distribution(const ExtendedLandscape& landscape);

}  // namespace ndl
