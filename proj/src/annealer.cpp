#include "ndscape/annealer.hpp"

#include <array>
#include <cmath>

#include "ndscape/errors.hpp"

namespace ndl {

AnnealSchedule AnnealSchedule::defaults(int n_bits) {
  AnnealSchedule s;
  s.moves_per_epoch = std::uint64_t{1} << n_bits;
  s.total_moves = 64 * s.moves_per_epoch;
  return s;
}

void AnnealSchedule::validate() const {
  if (!(initial_temperature > 0.0) || !std::isfinite(initial_temperature))
    throw ContractError("initial temperature must be positive");
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
    throw ContractError("cooling factor must lie in (0, 1)");
  if (moves_per_epoch < 1) throw ContractError("moves per epoch must be at least 1");
  if (total_moves < 1) throw ContractError("total moves must be at least 1");
}

namespace {

// Fills `out` with the changes of setting s to v; returns the entry count.
std::size_t collect_changes(std::span<const double> f, std::span<const std::uint8_t> degree,
                            int n_bits, std::uint32_t s, double v,
                            std::array<DegreeChange, kMaxStoredBits + 1>& out) {
  const double old = f[s];
  if (v == old) return 0;
  std::size_t count = 1;
  int s_degree = 0;
  for (int i = 0; i < n_bits; ++i) {
    const std::uint32_t h = s ^ (std::uint32_t{1} << i);
    const bool was = f[h] == old;
    const bool now = f[h] == v;
    s_degree += now ? 1 : 0;
    if (was != now) {
      const int d = degree[h];
      out[count++] = {Genotype{h}, d, now ? d + 1 : d - 1};
    }
  }
  out[0] = {Genotype{s}, degree[s], s_degree};
  if (out[0].old_degree == out[0].new_degree) {
    for (std::size_t k = 1; k < count; ++k) out[k - 1] = out[k];
    --count;
  }
  return count;
}

class Chain {
 public:
  Chain(const Landscape& start, const DegreeDistribution& target)
      : n_bits_(start.n_bits()),
        fitness_(start.table().begin(), start.table().end()),
        degree_(neutral_degrees(start)),
        counts_(static_cast<std::size_t>(n_bits_) + 1, 0),
        scaled_target_(target.size()),
        inv_size_(1.0 / static_cast<double>(fitness_.size())) {
    for (std::uint8_t d : degree_) ++counts_[d];
    for (std::size_t k = 0; k < target.size(); ++k) scaled_target_[k] = target[k];
    energy_ = energy_of(counts_);
  }

  double energy() const { return energy_; }
  std::size_t size() const { return fitness_.size(); }
  int n_bits() const { return n_bits_; }
  double fitness(std::uint32_t g) const { return fitness_[g]; }

  double energy_of(std::span<const std::int64_t> counts) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const double diff = static_cast<double>(counts[k]) * inv_size_ - scaled_target_[k];
      acc += diff * diff;
    }
    return std::sqrt(acc);
  }

  // Energy after the proposed move; leaves the changes in pending_.
  double propose(std::uint32_t s, double v) {
    pending_count_ = collect_changes(fitness_, degree_, n_bits_, s, v, pending_);
    trial_ = counts_;
    for (std::size_t k = 0; k < pending_count_; ++k) {
      --trial_[static_cast<std::size_t>(pending_[k].old_degree)];
      ++trial_[static_cast<std::size_t>(pending_[k].new_degree)];
    }
    return pending_count_ == 0 ? energy_ : energy_of(trial_);
  }

  void commit(std::uint32_t s, double v, double energy) {
    for (std::size_t k = 0; k < pending_count_; ++k)
      degree_[pending_[k].genotype.value] = static_cast<std::uint8_t>(pending_[k].new_degree);
    counts_.swap(trial_);
    fitness_[s] = v;
    energy_ = energy;
  }

  // Undo path: rewrite a value without energy bookkeeping beyond the degrees.
  void restore(std::uint32_t s, double v) {
    const std::size_t n = collect_changes(fitness_, degree_, n_bits_, s, v, pending_);
    for (std::size_t k = 0; k < n; ++k) {
      --counts_[static_cast<std::size_t>(pending_[k].old_degree)];
      ++counts_[static_cast<std::size_t>(pending_[k].new_degree)];
      degree_[pending_[k].genotype.value] = static_cast<std::uint8_t>(pending_[k].new_degree);
    }
    fitness_[s] = v;
  }

  Landscape landscape() const { return Landscape(n_bits_, fitness_); }

 private:
  int n_bits_;
  std::vector<double> fitness_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> trial_;
  std::vector<double> scaled_target_;
  double inv_size_;
  double energy_ = 0.0;
  std::array<DegreeChange, kMaxStoredBits + 1> pending_{};
  std::size_t pending_count_ = 0;
};

struct UndoEntry {
  std::uint32_t genotype;
  double previous;
};

}  // namespace

std::vector<DegreeChange> degree_delta(const Landscape& landscape, Genotype s, double new_fitness) {
  const auto degrees = neutral_degrees(landscape);
  std::array<DegreeChange, kMaxStoredBits + 1> buf{};
  const std::size_t n =
      collect_changes(landscape.table(), degrees, landscape.n_bits(), s.value, new_fitness, buf);
  return {buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n)};
}

Landscape refine(const Landscape& landscape, const DegreeDistribution& target,
                 const AnnealSchedule& schedule, Rng& rng, AnnealStats* stats) {
  schedule.validate();
  if (target.max_degree() != landscape.n_bits())
    throw ContractError("target distribution does not match the landscape width");
  if (!target.is_normalized()) throw ContractError("target distribution is not normalized");

  const double input_energy = rms_distance(degree_distribution(landscape), target);
  Chain chain(landscape, target);
  double best = chain.energy();
  std::vector<UndoEntry> since_best;
  double temperature = schedule.initial_temperature;
  std::uint64_t accepted = 0;
  if (stats) {
    stats->trace.clear();
    stats->trace.push_back({0, chain.energy()});
  }

  const int n = chain.n_bits();
  for (std::uint64_t move = 1; move <= schedule.total_moves; ++move) {
    const auto s = static_cast<std::uint32_t>(rng.below(chain.size()));
    double v;
    if (rng.below(2) == 0)
      v = chain.fitness(s ^ (std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(n))));
    else
      v = rng.uniform();

    const double proposed = chain.propose(s, v);
    const double delta = proposed - chain.energy();
    if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
      if (chain.fitness(s) != v) {
        since_best.push_back({s, chain.fitness(s)});
        chain.commit(s, v, proposed);
        ++accepted;
        if (proposed < best) {
          best = proposed;
          since_best.clear();
        }
      }
    }
    if (move % schedule.moves_per_epoch == 0) {
      temperature *= schedule.cooling_factor;
      if (stats) stats->trace.push_back({move, chain.energy()});
    }
  }

  for (auto it = since_best.rbegin(); it != since_best.rend(); ++it) chain.restore(it->genotype, it->previous);

  Landscape result = chain.landscape();
  double result_energy = rms_distance(degree_distribution(result), target);
  if (result_energy > input_energy) {
    result = landscape;
    result_energy = input_energy;
  }
  if (stats) {
    stats->initial_energy = input_energy;
    stats->final_energy = result_energy;
    stats->accepted = accepted;
  }
  return result;
}

}  // namespace ndl
