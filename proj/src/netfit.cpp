#include "ndscape/netfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ndscape/errors.hpp"

namespace ndl {

void TrapParams::validate() const {
  if (!(b > 0.0 && b < 1.0)) throw ContractError("trap parameter b must lie in (0, 1)");
  if (!(r > 0.0 && r <= 1.0)) throw ContractError("trap parameter r must lie in (0, 1]");
}

double trap(double d, const TrapParams& params) {
  params.validate();
  if (!(d >= 0.0 && d <= 1.0)) throw ContractError("trap distance must lie in [0, 1]");
  if (d <= params.b) return 1.0 - d / params.b;
  return params.r * (d - params.b) / (1.0 - params.b);
}

DegreeDistribution window_distribution(int p, int w, int n_bits) {
  if (n_bits < 0 || p < 0 || w < 1 || p + w - 1 > n_bits)
    throw ContractError("window [p, p+w-1] must lie inside [0, " + std::to_string(n_bits) + "]");
  std::vector<double> weights(static_cast<std::size_t>(n_bits) + 1, 0.0);
  for (int d = p; d < p + w; ++d) weights[static_cast<std::size_t>(d)] = 1.0 / w;
  return DegreeDistribution(std::move(weights));
}

double centroid_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) throw ContractError("centroids differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  // Clamp rounding spill so trap() accepts the result.
  return std::clamp(acc / static_cast<double>(a.size()), 0.0, 1.0);
}

namespace {

constexpr int kMaxRedraws = 1000;

// Gaps at rounding level count as ties, not as a scale for the noise.
constexpr double kTieTolerance = 1e-12;

double min_nonzero_gap(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] - values[k - 1] > kTieTolerance) gap = std::min(gap, values[k] - values[k - 1]);
  return gap;
}

}  // namespace

TrapAssignment assign_trap(const Landscape& landscape, const TrapParams& params,
                           const TrapOptions& options, Rng& rng) {
  params.validate();
  if (!(options.noise_amplitude >= 0.0) || !std::isfinite(options.noise_amplitude))
    throw ContractError("noise amplitude must be finite and non-negative");
  if (options.anchor.value >= landscape.size()) throw ContractError("anchor genotype outside the space");

  const NetworkPartition part = partition_networks(landscape);
  const std::uint32_t opt = part.label[options.anchor.value];
  const auto& opt_centroid = part.networks[opt].centroid;
  const std::size_t count = part.networks.size();

  TrapAssignment out{landscape, {}, {}};
  out.networks.resize(count);
  std::vector<double> base(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    const double d = k == opt ? 0.0 : centroid_distance(part.networks[k].centroid, opt_centroid);
    base[k] = k == opt ? 1.0 : trap(d, params);
    out.networks[k] = {k, part.networks[k].size(), d, base[k]};
  }

  const double noise = options.noise_amplitude;
  if (noise > 0.0) {
    const double gap = min_nonzero_gap(base);
    if (std::isfinite(gap) && noise >= gap / 2) {
      std::ostringstream msg;
      msg << "noise amplitude " << noise << " is at least half the smallest trap-value gap " << gap
          << "; basin ordering may change";
      out.warnings.push_back(msg.str());
    }
    auto draw = [&](std::uint32_t k) {
      // Keep every noisy value below the anchor's 1.0.
      const double room = base[k] < 1.0 ? std::min(noise, 1.0 - base[k]) : noise;
      double v = base[k] + rng.uniform() * room;
      for (int tries = 0; v >= 1.0 && base[k] < 1.0 && tries < kMaxRedraws; ++tries)
        v = base[k] + rng.uniform() * room;
      out.networks[k].fitness = v;
    };
    for (std::uint32_t k = 0; k < count; ++k)
      if (k != opt) draw(k);

    bool clean = false;
    for (int pass = 0; pass < kMaxRedraws && !clean; ++pass) {
      clean = true;
      for (std::uint32_t k = 0; k < count; ++k) {
        if (k == opt) continue;
        for (std::uint32_t j : part.adjacency[k]) {
          if (out.networks[j].fitness == out.networks[k].fitness) {
            draw(k);
            clean = false;
            break;
          }
        }
      }
    }
    if (!clean) out.warnings.push_back("could not separate the fitness of some adjacent networks");
  } else {
    for (std::uint32_t k = 0; k < count; ++k) {
      const bool clash = std::any_of(part.adjacency[k].begin(), part.adjacency[k].end(),
                                     [&](std::uint32_t j) { return base[j] == base[k]; });
      if (clash) {
        out.warnings.push_back("adjacent networks share a trap value without noise; they will merge");
        break;
      }
    }
  }
  for (std::uint32_t k = 0; k < count; ++k) {
    if (k != opt && out.networks[k].fitness >= 1.0) {
      out.warnings.push_back("a network other than the anchor reaches fitness 1.0");
      break;
    }
  }

  for (std::uint32_t g = 0; g < landscape.size(); ++g)
    out.landscape.set(Genotype{g}, out.networks[part.label[g]].fitness);
  return out;
}

}  // namespace ndl
