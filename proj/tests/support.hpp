#pragma once

#include <cstdint>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl::test {

// Fitness drawn from `levels` values so that neutrality actually occurs.
inline Landscape random_landscape(int n_bits, int levels, Rng& rng) {
  std::vector<double> f(std::size_t{1} << n_bits);
  for (auto& v : f) v = static_cast<double>(rng.below(static_cast<std::uint64_t>(levels))) / levels;
  return Landscape(n_bits, std::move(f));
}

inline Landscape flat_landscape(int n_bits, double value = 0.5) {
  return Landscape(n_bits, std::vector<double>(std::size_t{1} << n_bits, value));
}

inline Landscape distinct_landscape(int n_bits) {
  std::vector<double> f(std::size_t{1} << n_bits);
  for (std::size_t g = 0; g < f.size(); ++g) f[g] = static_cast<double>(g) / static_cast<double>(f.size());
  return Landscape(n_bits, std::move(f));
}

// Brute-force neighbour scan, independent of the library kernels.
inline std::vector<int> oracle_degrees(const Landscape& l) {
  std::vector<int> out(l.size());
  for (std::uint32_t g = 0; g < l.size(); ++g) {
    int d = 0;
    for (int i = 0; i < l.n_bits(); ++i) {
      const std::uint32_t h = g ^ (1u << i);
      if (l.table()[h] == l.table()[g]) ++d;
    }
    out[g] = d;
  }
  return out;
}

// Union-find over neutral edges; returns the smallest member of each genotype's component.
inline std::vector<std::uint32_t> oracle_components(const Landscape& l) {
  std::vector<std::uint32_t> parent(l.size());
  for (std::uint32_t g = 0; g < l.size(); ++g) parent[g] = g;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t g = 0; g < l.size(); ++g)
    for (int i = 0; i < l.n_bits(); ++i) {
      const std::uint32_t h = g ^ (1u << i);
      if (l.table()[h] == l.table()[g]) {
        const auto a = find(g), b = find(h);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<std::uint32_t> root(l.size());
  for (std::uint32_t g = 0; g < l.size(); ++g) root[g] = find(g);
  return root;
}

}  // namespace ndl::test
