#include "ndscape/kernels.hpp"

#include <array>

namespace ndl::kernels::scalar {

void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out) {
  const std::size_t size = fitness.size();
  for (std::size_t g = 0; g < size; ++g) {
    const double f = fitness[g];
    unsigned count = 0;
    for (int i = 0; i < n_bits; ++i) count += (fitness[g ^ (std::size_t{1} << i)] == f) ? 1u : 0u;
    out[g] = static_cast<std::uint8_t>(count);
  }
}

double sum(std::span<const double> x) {
  std::array<double, 4> acc{};
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (std::size_t k = 0; k < 4; ++k) acc[k] += x[i + k];
  for (std::size_t k = 0; i + k < n; ++k) acc[k] += x[i + k];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y) {
  std::array<double, 4> xx{}, yy{}, xy{};
  const std::size_t n = x.size();
  auto step = [&](std::size_t k, std::size_t j) {
    const double dx = x[j] - mean_x;
    const double dy = y[j] - mean_y;
    xx[k] += dx * dx;
    yy[k] += dy * dy;
    xy[k] += dx * dy;
  };
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (std::size_t k = 0; k < 4; ++k) step(k, i + k);
  for (std::size_t k = 0; i + k < n; ++k) step(k, i + k);
  return {(xx[0] + xx[1]) + (xx[2] + xx[3]), (yy[0] + yy[1]) + (yy[2] + yy[3]),
          (xy[0] + xy[1]) + (xy[2] + xy[3])};
}

}  // namespace ndl::kernels::scalar
