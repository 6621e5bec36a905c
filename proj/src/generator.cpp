#include "ndscape/generator.hpp"

#include <algorithm>
#include <string>

#include "ndscape/errors.hpp"

namespace ndl {

int roulette_wheel(std::span<const double> weights, std::span<const int> feasible, Rng& rng) {
  if (feasible.empty()) throw ContractError("roulette wheel called with no feasible degree");
  double total = 0.0;
  for (int d : feasible) total += std::max(0.0, weights[static_cast<std::size_t>(d)]);
  if (!(total > 0.0)) return feasible[rng.below(feasible.size())];

  const double ball = rng.uniform() * total;
  double cumulative = 0.0;
  int last_positive = feasible.front();
  for (int d : feasible) {
    const double w = std::max(0.0, weights[static_cast<std::size_t>(d)]);
    if (w <= 0.0) continue;
    cumulative += w;
    last_positive = d;
    if (ball < cumulative) return d;
  }
  return last_positive;
}

std::vector<int> DegreeRange::degrees() const {
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

GenerationState::GenerationState(int n_bits, const DegreeDistribution& target)
    : n_bits_(n_bits),
      value_of_(std::size_t{1} << n_bits, kUnaffected),
      forbidden_(std::size_t{1} << n_bits),
      frozen_(std::size_t{1} << n_bits, 0),
      budget_(target.weights().begin(), target.weights().end()) {
  if (target.max_degree() != n_bits)
    throw ContractError("target distribution has " + std::to_string(target.size()) +
                        " bins, expected " + std::to_string(n_bits + 1));
}

bool GenerationState::is_forbidden(Genotype g, std::uint32_t id) const {
  const auto& f = forbidden_[g.value];
  return std::find(f.begin(), f.end(), id) != f.end();
}

std::uint32_t GenerationState::add_value(double fitness) {
  if (!used_.insert(fitness).second) throw ContractError("fitness value already in use");
  values_.push_back(fitness);
  return static_cast<std::uint32_t>(values_.size() - 1);
}

std::uint32_t GenerationState::fresh_value(Rng& rng) {
  for (;;) {
    const double v = rng.uniform();
    if (used_.insert(v).second) {
      values_.push_back(v);
      return static_cast<std::uint32_t>(values_.size() - 1);
    }
  }
}

void GenerationState::assign(Genotype g, std::uint32_t id) { value_of_[g.value] = id; }

void GenerationState::forbid(Genotype g, std::uint32_t id) {
  if (!is_forbidden(g, id)) forbidden_[g.value].push_back(id);
}

DegreeRange GenerationState::range_for(Genotype s, std::uint32_t id) const {
  int already = 0;
  int open = 0;
  for (int i = 0; i < n_bits_; ++i) {
    const Genotype h = flip(s, i);
    const std::uint32_t hv = value_of_[h.value];
    if (hv == kUnaffected) {
      // A fresh value appears in nobody's forbidden list.
      if (id == kUnaffected || !is_forbidden(h, id)) ++open;
    } else if (hv == id) {
      ++already;
    }
  }
  return {already, already + open};
}

std::vector<GenerationState::ValueOption> GenerationState::value_options(Genotype s) const {
  const std::uint32_t own = value_of_[s.value];
  if (own != kUnaffected) return {{own, range_for(s, own)}};

  // Frozen neighbours' values are all in forbidden(s), so joining any other
  // neighbour value leaves every frozen degree untouched.
  std::vector<ValueOption> out{{kUnaffected, range_for(s, kUnaffected)}};
  for (int i = 0; i < n_bits_; ++i) {
    const std::uint32_t hv = value_of_[flip(s, i).value];
    if (hv == kUnaffected || is_forbidden(s, hv)) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ValueOption& o) { return o.id == hv; });
    if (!seen) out.push_back({hv, range_for(s, hv)});
  }
  return out;
}

std::vector<int> GenerationState::feasible_degrees(Genotype s) const {
  std::vector<bool> mark(static_cast<std::size_t>(n_bits_) + 1, false);
  for (const auto& option : value_options(s))
    for (int d = option.degrees.lo; d <= option.degrees.hi; ++d) mark[static_cast<std::size_t>(d)] = true;
  std::vector<int> out;
  for (int d = 0; d <= n_bits_; ++d)
    if (mark[static_cast<std::size_t>(d)]) out.push_back(d);
  return out;
}

int GenerationState::process(Genotype s, Rng& rng) {
  const auto options = value_options(s);
  const auto feasible = feasible_degrees(s);
  const int degree = roulette_wheel(budget_, feasible, rng);

  std::size_t matching = 0;
  for (const auto& o : options) matching += o.degrees.contains(degree) ? 1 : 0;
  std::size_t pick = rng.below(matching);
  const ValueOption* chosen = nullptr;
  for (const auto& o : options) {
    if (o.degrees.contains(degree) && pick-- == 0) {
      chosen = &o;
      break;
    }
  }
  std::uint32_t v = chosen->id;
  if (v == kUnaffected) v = fresh_value(rng);
  assign(s, v);

  scratch_open_.clear();
  for (int i = 0; i < n_bits_; ++i) {
    const Genotype h = flip(s, i);
    if (!affected(h) && !is_forbidden(h, v)) scratch_open_.push_back(h.value);
  }
  // Uniform choice of recipients: partial Fisher-Yates over the open list.
  const auto grants = static_cast<std::size_t>(degree - chosen->degrees.lo);
  for (std::size_t k = 0; k < grants; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(rng.below(scratch_open_.size() - k));
    std::swap(scratch_open_[k], scratch_open_[j]);
    assign(Genotype{scratch_open_[k]}, v);
  }
  for (int i = 0; i < n_bits_; ++i) {
    const Genotype h = flip(s, i);
    if (!affected(h)) forbid(h, v);
  }

  frozen_[s.value] = 1;
  budget_[static_cast<std::size_t>(degree)] -= 1.0 / static_cast<double>(size());
  return degree;
}

Landscape GenerationState::finish(Rng& rng) {
  std::vector<double> table(size());
  for (std::size_t g = 0; g < size(); ++g) {
    if (value_of_[g] == kUnaffected) value_of_[g] = fresh_value(rng);
    table[g] = values_[value_of_[g]];
  }
  return Landscape(n_bits_, std::move(table));
}

std::vector<Genotype> candidate_order(int n_bits, Genotype origin) {
  const std::size_t size = std::size_t{1} << n_bits;
  // Counting sort by distance; the inner scan is ascending so ties stay ordered by value.
  std::vector<std::size_t> start(static_cast<std::size_t>(n_bits) + 2, 0);
  for (std::uint32_t g = 0; g < size; ++g) ++start[static_cast<std::size_t>(hamming_distance(Genotype{g}, origin)) + 1];
  for (std::size_t d = 1; d < start.size(); ++d) start[d] += start[d - 1];
  std::vector<Genotype> order(size);
  for (std::uint32_t g = 0; g < size; ++g)
    order[start[static_cast<std::size_t>(hamming_distance(Genotype{g}, origin))]++] = Genotype{g};
  return order;
}

Landscape generate_nd(int n_bits, const DegreeDistribution& target, Rng& rng,
                      const GeneratorOptions& options) {
  const int limit = options.allow_large ? kMaxStoredBits : kDefaultMaxGeneratedBits;
  if (n_bits < 1 || n_bits > limit)
    throw ContractError("generator width must be in [1, " + std::to_string(limit) + "], got " +
                        std::to_string(n_bits));
  if (!target.is_normalized()) throw ContractError("target distribution is not normalized");

  GenerationState state(n_bits, target);
  const Genotype origin{static_cast<std::uint32_t>(rng.below(state.size()))};
  if (options.log) {
    options.log->clear();
    options.log->reserve(state.size());
  }
  for (Genotype s : candidate_order(n_bits, origin)) {
    const int degree = state.process(s, rng);
    if (options.log) options.log->push_back({s, degree});
  }
  return state.finish(rng);
}

}  // namespace ndl
