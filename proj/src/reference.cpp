#include "ndscape/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ndscape/errors.hpp"

namespace ndl {

Landscape royal_road(int n_bits, int n_blocks, int block_size) {
  if (n_blocks < 1 || block_size < 1 || n_bits != n_blocks * block_size)
    throw ContractError("royal road needs n_bits = n_blocks * block_size");
  const std::uint32_t block_mask = (std::uint32_t{1} << block_size) - 1;
  std::vector<double> table(std::size_t{1} << n_bits);
  for (std::uint32_t g = 0; g < table.size(); ++g) {
    int complete = 0;
    for (int j = 0; j < n_blocks; ++j) complete += ((g >> (j * block_size)) & block_mask) == block_mask;
    table[g] = complete;
  }
  return Landscape(n_bits, std::move(table));
}

double NkTables::component(int locus, std::uint32_t genotype) const {
  const auto i = static_cast<std::size_t>(locus);
  std::uint32_t index = (genotype >> locus) & 1u;
  for (std::size_t j = 0; j < partners[i].size(); ++j)
    index |= ((genotype >> partners[i][j]) & 1u) << (j + 1);
  return component_values[i][index];
}

double NkTables::fitness(std::uint32_t genotype) const {
  double total = 0.0;
  for (int i = 0; i < n_bits; ++i) total += component(i, genotype);
  return total / n_bits;
}

NkTables make_nk_tables(int n_bits, int k, const NkVariant& variant, Rng& rng) {
  if (n_bits < 1 || n_bits > kMaxStoredBits) throw ContractError("NK width out of range");
  if (k < 0 || k >= n_bits) throw ContractError("NK requires 0 <= K < N");
  if (const auto* v = std::get_if<NkProbabilistic>(&variant); v && !(v->p >= 0.0 && v->p <= 1.0))
    throw ContractError("NKp requires 0 <= p <= 1");
  if (const auto* v = std::get_if<NkQuantized>(&variant); v && v->q < 2)
    throw ContractError("NKq requires q >= 2");

  NkTables t;
  t.n_bits = n_bits;
  t.k = k;
  t.partners.resize(static_cast<std::size_t>(n_bits));
  t.component_values.resize(static_cast<std::size_t>(n_bits));
  std::vector<int> others;
  for (int i = 0; i < n_bits; ++i) {
    others.clear();
    for (int j = 0; j < n_bits; ++j)
      if (j != i) others.push_back(j);
    for (int j = 0; j < k; ++j) {
      const auto pick = static_cast<std::size_t>(j) + rng.below(others.size() - static_cast<std::size_t>(j));
      std::swap(others[static_cast<std::size_t>(j)], others[pick]);
    }
    t.partners[static_cast<std::size_t>(i)].assign(others.begin(), others.begin() + k);
  }

  const std::size_t entries = std::size_t{1} << (k + 1);
  for (auto& values : t.component_values) {
    values.resize(entries);
    bool zero_component = false;
    if (const auto* v = std::get_if<NkProbabilistic>(&variant); v && v->zeroing == NkpZeroing::component)
      zero_component = rng.uniform() < v->p;
    for (double& x : values) {
      x = std::visit(
          [&](const auto& v) -> double {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, NkPlain>) {
              return rng.uniform();
            } else if constexpr (std::is_same_v<V, NkProbabilistic>) {
              if (v.zeroing == NkpZeroing::component) {
                const double u = rng.uniform();
                return zero_component ? 0.0 : u;
              }
              // Always consume both draws so tables stay aligned across p.
              const bool zero = rng.uniform() < v.p;
              const double u = rng.uniform();
              return zero ? 0.0 : u;
            } else {
              return static_cast<double>(rng.below(static_cast<std::uint64_t>(v.q)));
            }
          },
          variant);
    }
  }
  return t;
}

Landscape nk_family(int n_bits, int k, const NkVariant& variant, Rng& rng) {
  const NkTables t = make_nk_tables(n_bits, k, variant, rng);
  std::vector<double> table(std::size_t{1} << n_bits);
  for (std::uint32_t g = 0; g < table.size(); ++g) table[g] = t.fitness(g);
  return Landscape(n_bits, std::move(table));
}

Landscape technological(int n_bits, int k, int m_levels, Rng& rng) {
  if (m_levels < 1) throw ContractError("technological landscapes need M >= 1");
  Landscape nk = nk_family(n_bits, k, NkPlain{}, rng);
  std::vector<double> table(nk.table().begin(), nk.table().end());
  const double m = m_levels;
  for (double& f : table) f = std::min(std::floor(f * m), m - 1.0) / m;
  return Landscape(n_bits, std::move(table));
}

}  // namespace ndl
