#include "ndscape/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ndscape/errors.hpp"
#include "ndscape/kernels.hpp"

namespace ndl {

std::vector<Genotype> neighbors(Genotype g, int n_bits) {
  std::vector<Genotype> out;
  out.reserve(static_cast<std::size_t>(n_bits));
  for (int i = 0; i < n_bits; ++i) out.push_back(flip(g, i));
  return out;
}

Landscape::Landscape(int n_bits, std::vector<double> fitness)
    : n_bits_(n_bits), fitness_(std::move(fitness)) {
  if (n_bits < 1 || n_bits > kMaxStoredBits)
    throw ContractError("landscape width must be in [1, " + std::to_string(kMaxStoredBits) +
                        "], got " + std::to_string(n_bits));
  if (fitness_.size() != (std::size_t{1} << n_bits))
    throw ContractError("fitness table has " + std::to_string(fitness_.size()) +
                        " entries, expected 2^" + std::to_string(n_bits));
  for (std::size_t g = 0; g < fitness_.size(); ++g)
    if (!std::isfinite(fitness_[g]))
      throw ContractError("fitness of genotype " + std::to_string(g) + " is not finite");
}

Landscape Landscape::flat(int n_bits, double value) {
  if (n_bits < 1 || n_bits > kMaxStoredBits) throw ContractError("landscape width out of range");
  return Landscape(n_bits, std::vector<double>(std::size_t{1} << n_bits, value));
}

void Landscape::set(Genotype g, double value) {
  if (!std::isfinite(value)) throw ContractError("fitness must be finite");
  fitness_[g.value] = value;
}

double Landscape::max_fitness() const { return *std::max_element(fitness_.begin(), fitness_.end()); }

DegreeDistribution::DegreeDistribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ContractError("degree distribution needs at least one weight");
  for (double w : weights_)
    if (!std::isfinite(w) || w < 0.0)
      throw ContractError("degree distribution weights must be finite and non-negative");
}

DegreeDistribution DegreeDistribution::delta(int max_degree, int degree) {
  if (max_degree < 0 || degree < 0 || degree > max_degree)
    throw ContractError("delta degree outside [0, max_degree]");
  std::vector<double> w(static_cast<std::size_t>(max_degree) + 1, 0.0);
  w[static_cast<std::size_t>(degree)] = 1.0;
  return DegreeDistribution(std::move(w));
}

bool DegreeDistribution::is_normalized(double tolerance) const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return std::abs(total - 1.0) <= tolerance;
}

DistributionStats distribution_stats(const DegreeDistribution& d) {
  if (!d.is_normalized()) throw ContractError("distribution weights do not sum to 1");
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double x = static_cast<double>(k);
    mean += x * d[k];
    second += x * x * d[k];
  }
  return {mean, std::sqrt(std::max(0.0, second - mean * mean))};
}

double rms_distance(const DegreeDistribution& a, const DegreeDistribution& b) {
  if (a.size() != b.size())
    throw ContractError("distributions cover different degree ranges (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + " bins)");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

int neutral_degree(const Landscape& landscape, Genotype g) {
  const double f = landscape[g];
  int count = 0;
  for (int i = 0; i < landscape.n_bits(); ++i) count += landscape[flip(g, i)] == f ? 1 : 0;
  return count;
}

std::vector<std::uint8_t> neutral_degrees(const Landscape& landscape) {
  std::vector<std::uint8_t> out(landscape.size());
  kernels::neutral_degrees(landscape.table(), landscape.n_bits(), out);
  return out;
}

std::vector<std::uint64_t> degree_histogram(const Landscape& landscape) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(landscape.n_bits()) + 1, 0);
  for (std::uint8_t d : neutral_degrees(landscape)) ++counts[d];
  return counts;
}

DegreeDistribution distribution_from_counts(std::span<const std::uint64_t> counts,
                                            std::uint64_t space_size) {
  std::vector<double> w(counts.size());
  const double scale = 1.0 / static_cast<double>(space_size);
  for (std::size_t k = 0; k < counts.size(); ++k) w[k] = static_cast<double>(counts[k]) * scale;
  return DegreeDistribution(std::move(w));
}

DegreeDistribution degree_distribution(const Landscape& landscape) {
  return distribution_from_counts(degree_histogram(landscape), landscape.size());
}

bool NetworkPartition::same_grouping(const NetworkPartition& other) const {
  if (label.size() != other.label.size() || networks.size() != other.networks.size()) return false;
  // Both are ordered by smallest member, so equal groupings have equal labels.
  return label == other.label;
}

NetworkPartition partition_networks(const Landscape& landscape) {
  constexpr auto kUnlabelled = static_cast<std::uint32_t>(-1);
  const int n = landscape.n_bits();
  const std::size_t size = landscape.size();
  const auto table = landscape.table();

  NetworkPartition part;
  part.label.assign(size, kUnlabelled);
  std::vector<std::uint32_t> queue;
  queue.reserve(size);

  // Seeds are visited in ascending order, so networks come out ordered by
  // their smallest member.
  for (std::uint32_t seed = 0; seed < size; ++seed) {
    if (part.label[seed] != kUnlabelled) continue;
    const auto id = static_cast<std::uint32_t>(part.networks.size());
    const double f = table[seed];
    queue.clear();
    queue.push_back(seed);
    part.label[seed] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t g = queue[head];
      for (int i = 0; i < n; ++i) {
        const std::uint32_t h = g ^ (std::uint32_t{1} << i);
        if (part.label[h] == kUnlabelled && table[h] == f) {
          part.label[h] = id;
          queue.push_back(h);
        }
      }
    }
    NeutralNetwork net;
    net.fitness = f;
    std::sort(queue.begin(), queue.end());
    net.members.reserve(queue.size());
    std::vector<std::uint64_t> ones(static_cast<std::size_t>(n), 0);
    for (std::uint32_t g : queue) {
      net.members.push_back(Genotype{g});
      for (int i = 0; i < n; ++i) ones[static_cast<std::size_t>(i)] += (g >> i) & 1u;
    }
    net.centroid.resize(static_cast<std::size_t>(n));
    const double inv = 1.0 / static_cast<double>(queue.size());
    for (int i = 0; i < n; ++i)
      net.centroid[static_cast<std::size_t>(i)] = static_cast<double>(ones[static_cast<std::size_t>(i)]) * inv;
    part.networks.push_back(std::move(net));
  }

  part.adjacency.assign(part.networks.size(), {});
  for (std::uint32_t g = 0; g < size; ++g) {
    const std::uint32_t a = part.label[g];
    for (int i = 0; i < n; ++i) {
      const std::uint32_t b = part.label[g ^ (std::uint32_t{1} << i)];
      if (a != b) part.adjacency[a].push_back(b);
    }
  }
  for (auto& adj : part.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return part;
}

std::vector<NeutralNetwork> extract_networks(const Landscape& landscape) {
  return partition_networks(landscape).networks;
}

}  // namespace ndl
