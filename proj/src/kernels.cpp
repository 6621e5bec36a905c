#include "ndscape/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace ndl::kernels {

namespace {

Isa detect() noexcept {
  if (const char* forced = std::getenv("NDSCAPE_ISA")) {
    const std::string_view name(forced);
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
  }
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
  if (isa == Isa::scalar) return true;
#if defined(NDSCAPE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
  current().store(isa_supported(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out) {
#if defined(NDSCAPE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::neutral_degrees(fitness, n_bits, out);
#endif
  scalar::neutral_degrees(fitness, n_bits, out);
}

double sum(std::span<const double> x) {
#if defined(NDSCAPE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::sum(x);
#endif
  return scalar::sum(x);
}

Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y) {
#if defined(NDSCAPE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::centered_moments(x, y, mean_x, mean_y);
#endif
  return scalar::centered_moments(x, y, mean_x, mean_y);
}

}  // namespace ndl::kernels
