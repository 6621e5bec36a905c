#include "ndscape/extension.hpp"

#include <string>

#include "ndscape/errors.hpp"

namespace ndl {

ExtendedLandscape::ExtendedLandscape(std::vector<Landscape> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ContractError("an extended landscape needs at least one component");
  for (const auto& c : components_) total_bits_ += c.n_bits();
}

ExtendedLandscape::ExtendedLandscape(Landscape single)
    : ExtendedLandscape(std::vector<Landscape>{std::move(single)}) {}

double ExtendedLandscape::evaluate(std::uint64_t g) const {
  double total = 0.0;
  for (const auto& c : components_) {
    const std::uint64_t mask = (std::uint64_t{1} << c.n_bits()) - 1;
    total += c.fitness(Genotype{static_cast<std::uint32_t>(g & mask)});
    g >>= c.n_bits();
  }
  return total;
}

double ExtendedLandscape::max_fitness() const {
  double total = 0.0;
  for (const auto& c : components_) total += c.max_fitness();
  return total;
}

Landscape ExtendedLandscape::flatten() const {
  if (total_bits_ > kMaxFlattenBits)
    throw ContractError("refusing to flatten " + std::to_string(total_bits_) + " bits (limit " +
                        std::to_string(kMaxFlattenBits) + ")");
  std::vector<double> table(std::size_t{1} << total_bits_);
  for (std::uint64_t g = 0; g < table.size(); ++g) table[g] = evaluate(g);
  return Landscape(total_bits_, std::move(table));
}

ExtendedLandscape extend(const ExtendedLandscape& first, const ExtendedLandscape& second) {
  std::vector<Landscape> all = first.components();
  all.insert(all.end(), second.components().begin(), second.components().end());
  return ExtendedLandscape(std::move(all));
}

DegreeDistribution convolve(const DegreeDistribution& a, const DegreeDistribution& b) {
  if (!a.is_normalized() || !b.is_normalized())
    throw ContractError("convolution requires normalized distributions");
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return DegreeDistribution(std::move(out));
}

DegreeDistribution extended_distribution(const ExtendedLandscape& landscape) {
  const auto& parts = landscape.components();
  DegreeDistribution acc = degree_distribution(parts.front());
  for (std::size_t k = 1; k < parts.size(); ++k) acc = convolve(acc, degree_distribution(parts[k]));
  return acc;
}

}  // namespace ndl
