#pragma once

// Classic neutral landscape families used as baselines: Royal Road, NK and
// its NKp / NKq / Technological variants.

#include <cstdint>
#include <variant>
#include <vector>

#include "ndscape/core.hpp"
#include "ndscape/rng.hpp"

namespace ndl {

/// Fitness = number of contiguous blocks (block j = loci [j*k, (j+1)*k)) whose bits are all 1.
Landscape royal_road(int n_bits, int n_blocks, int block_size);

struct NkPlain {};
enum class NkpZeroing {
  component,  // the whole component function f_i is 0 with probability p
  entry,      // each table entry of f_i is 0 with probability p
};

/// Non-zero entries are uniform in [0,1).
struct NkProbabilistic {
  double p = 0.0;
  NkpZeroing zeroing = NkpZeroing::component;
};
/// Each component entry is a uniform integer in {0, ..., q-1}.
struct NkQuantized {
  int q = 2;
};
using NkVariant = std::variant<NkPlain, NkProbabilistic, NkQuantized>;

struct NkTables {
  int n_bits = 0;
  int k = 0;
  std::vector<std::vector<int>> partners;            // K distinct loci != i, per locus
  std::vector<std::vector<double>> component_values;  // 2^(K+1) entries per locus

  /// Index bit 0 is the locus's own allele, bit j+1 the allele of partners[i][j].
  double component(int locus, std::uint32_t genotype) const;

  /// Mean of the N component values.
  double fitness(std::uint32_t genotype) const;
};

NkTables make_nk_tables(int n_bits, int k, const NkVariant& variant, Rng& rng);

Landscape nk_family(int n_bits, int k, const NkVariant& variant, Rng& rng);

/// Plain NK fitness quantized to floor(f * M) / M, clamped to (M-1)/M.
Landscape technological(int n_bits, int k, int m_levels, Rng& rng);

}  // namespace ndl
