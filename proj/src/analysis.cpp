#include "ndscape/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ndscape/errors.hpp"
#include "ndscape/kernels.hpp"

namespace ndl {

std::string_view difficulty_name(Difficulty d) noexcept {
  switch (d) {
    case Difficulty::deceptive: return "deceptive";
    case Difficulty::easy: return "easy";
    case Difficulty::hard: break;
  }
  return "hard";
}

Difficulty classify_fdc(double fdc) noexcept {
  if (fdc >= kJonesThreshold) return Difficulty::deceptive;
  if (fdc <= -kJonesThreshold) return Difficulty::easy;
  return Difficulty::hard;
}

std::vector<Genotype> global_optima(const Landscape& landscape) {
  const double best = landscape.max_fitness();
  std::vector<Genotype> out;
  const auto table = landscape.table();
  for (std::uint32_t g = 0; g < table.size(); ++g)
    if (table[g] == best) out.push_back(Genotype{g});
  return out;
}

std::vector<std::uint8_t> distances_to_optima(const Landscape& landscape) {
  constexpr std::uint8_t kUnseen = 0xff;
  const int n = landscape.n_bits();
  std::vector<std::uint8_t> dist(landscape.size(), kUnseen);
  std::vector<std::uint32_t> queue;
  queue.reserve(landscape.size());
  for (Genotype g : global_optima(landscape)) {
    dist[g.value] = 0;
    queue.push_back(g.value);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t g = queue[head];
    const auto next = static_cast<std::uint8_t>(dist[g] + 1);
    for (int i = 0; i < n; ++i) {
      const std::uint32_t h = g ^ (std::uint32_t{1} << i);
      if (dist[h] == kUnseen) {
        dist[h] = next;
        queue.push_back(h);
      }
    }
  }
  return dist;
}

double correlation(std::span<const double> fitness, std::span<const double> distance) {
  if (fitness.size() != distance.size() || fitness.empty())
    throw ContractError("FDC needs two equally long, non-empty samples");
  const double m = static_cast<double>(fitness.size());
  const double mean_f = kernels::sum(fitness) / m;
  const double mean_d = kernels::sum(distance) / m;
  const kernels::Moments mo = kernels::centered_moments(fitness, distance, mean_f, mean_d);
  if (!(mo.sum_xx > 0.0)) throw ContractError("FDC undefined: fitness has zero variance");
  if (!(mo.sum_yy > 0.0)) throw ContractError("FDC undefined: distance has zero variance");
  const double r = mo.sum_xy / std::sqrt(mo.sum_xx * mo.sum_yy);
  return std::clamp(r, -1.0, 1.0);
}

FdcReport fdc(const Landscape& landscape) {
  const auto dist = distances_to_optima(landscape);
  std::vector<double> d(dist.begin(), dist.end());
  FdcReport report;
  report.fdc = correlation(landscape.table(), d);
  report.classification = classify_fdc(report.fdc);
  report.m = landscape.size();
  report.optima_count = static_cast<std::uint64_t>(std::count(dist.begin(), dist.end(), 0));
  return report;
}

std::vector<ScatterPoint> fdc_scatter(const Landscape& landscape, std::uint64_t sample, Rng& rng) {
  if (sample < 1 || sample > landscape.size())
    throw ContractError("scatter sample size must lie in [1, 2^N]");
  const auto dist = distances_to_optima(landscape);
  std::vector<ScatterPoint> out;
  out.reserve(sample);
  // Selection sampling: keeps each genotype with probability needed/remaining,
  // which yields a uniform subset already in ascending order.
  std::uint64_t needed = sample;
  std::uint64_t remaining = landscape.size();
  for (std::uint32_t g = 0; needed > 0; ++g, --remaining) {
    if (rng.below(remaining) < needed) {
      out.push_back({Genotype{g}, dist[g], landscape[Genotype{g}]});
      --needed;
    }
  }
  return out;
}

std::vector<RankEntry> network_size_ranking(const Landscape& landscape) {
  const auto networks = extract_networks(landscape);
  std::vector<std::size_t> sizes;
  sizes.reserve(networks.size());
  for (const auto& net : networks) sizes.push_back(net.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::vector<RankEntry> out;
  out.reserve(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k) out.push_back({k + 1, sizes[k]});
  return out;
}

}  // namespace ndl
