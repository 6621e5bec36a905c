#pragma once

// Data-parallel inner loops over an exhaustive fitness table.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active variant is chosen once at startup from CPUID and can be
// forced with the environment variable NDSCAPE_ISA=scalar|avx2.
//
// The scalar moment kernel accumulates in four interleaved lanes, the same
// order the AVX2 variant uses, so both return bit-identical sums.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ndl::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the CPU (and this build) can run `isa`.
bool isa_supported(Isa isa) noexcept;

/// Variant used by the dispatching entry points below.
Isa active_isa() noexcept;

/// Overrides the dispatch choice; falls back to scalar if `isa` is unsupported.
void set_active_isa(Isa isa) noexcept;

/// Centered second moments of two equally long sequences.
struct Moments {
  double sum_xx = 0.0;
  double sum_yy = 0.0;
  double sum_xy = 0.0;
};

// Neutral degree of every genotype: out[g] = #{i : fitness[g] == fitness[g ^ (1 << i)]}.
// fitness.size() == out.size() == 2^n_bits.
void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out);

double sum(std::span<const double> x);

/// Sums of (x-mean_x)^2, (y-mean_y)^2 and (x-mean_x)(y-mean_y).
Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y);

namespace scalar {
void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out);
double sum(std::span<const double> x);
Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y);
}  // namespace scalar

#if defined(NDSCAPE_HAVE_AVX2)
namespace avx2 {
void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out);
double sum(std::span<const double> x);
Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y);
}  // namespace avx2
#endif

}  // namespace ndl::kernels
