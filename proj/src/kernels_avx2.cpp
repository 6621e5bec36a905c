// Compiled with -mavx2 only; callers reach it through the runtime dispatcher.
// FMA is deliberately not enabled so results match the scalar lanes bit for bit.

#include "ndscape/kernels.hpp"

#include <immintrin.h>

#include <array>

namespace ndl::kernels::avx2 {

namespace {

inline double horizontal(__m256d v) {
  alignas(32) std::array<double, 4> lanes;
  _mm256_store_pd(lanes.data(), v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

void neutral_degrees(std::span<const double> fitness, int n_bits, std::span<std::uint8_t> out) {
  // Loci 0 and 1 pair up lanes inside one 4-wide block; higher loci pair whole blocks.
  if (n_bits < 2) {
    scalar::neutral_degrees(fitness, n_bits, out);
    return;
  }
  const double* f = fitness.data();
  const std::size_t size = fitness.size();
  alignas(32) std::array<std::int64_t, 4> lanes;
  for (std::size_t base = 0; base < size; base += 4) {
    const __m256d v = _mm256_loadu_pd(f + base);
    __m256i count = _mm256_setzero_si256();

    __m256d partner = _mm256_permute_pd(v, 0x5);
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(v, partner, _CMP_EQ_OQ)));
    partner = _mm256_permute4x64_pd(v, 0x4E);
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(v, partner, _CMP_EQ_OQ)));

    for (int i = 2; i < n_bits; ++i) {
      partner = _mm256_loadu_pd(f + (base ^ (std::size_t{1} << i)));
      count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(v, partner, _CMP_EQ_OQ)));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), count);
    for (std::size_t k = 0; k < 4; ++k) out[base + k] = static_cast<std::uint8_t>(lanes[k]);
  }
}

double sum(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
  alignas(32) std::array<double, 4> lanes;
  _mm256_store_pd(lanes.data(), acc);
  for (std::size_t k = 0; i + k < n; ++k) lanes[k] += p[i + k];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

Moments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                         double mean_y) {
  const double* px = x.data();
  const double* py = y.data();
  const std::size_t n = x.size();
  const __m256d mx = _mm256_set1_pd(mean_x);
  const __m256d my = _mm256_set1_pd(mean_y);
  __m256d xx = _mm256_setzero_pd();
  __m256d yy = _mm256_setzero_pd();
  __m256d xy = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + i), mx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + i), my);
    xx = _mm256_add_pd(xx, _mm256_mul_pd(dx, dx));
    yy = _mm256_add_pd(yy, _mm256_mul_pd(dy, dy));
    xy = _mm256_add_pd(xy, _mm256_mul_pd(dx, dy));
  }
  if (i == n) return {horizontal(xx), horizontal(yy), horizontal(xy)};

  alignas(32) std::array<double, 4> lxx, lyy, lxy;
  _mm256_store_pd(lxx.data(), xx);
  _mm256_store_pd(lyy.data(), yy);
  _mm256_store_pd(lxy.data(), xy);
  for (std::size_t k = 0; i + k < n; ++k) {
    const double dx = px[i + k] - mean_x;
    const double dy = py[i + k] - mean_y;
    lxx[k] += dx * dx;
    lyy[k] += dy * dy;
    lxy[k] += dx * dy;
  }
  return {(lxx[0] + lxx[1]) + (lxx[2] + lxx[3]), (lyy[0] + lyy[1]) + (lyy[2] + lyy[3]),
          (lxy[0] + lxy[1]) + (lxy[2] + lxy[3])};
}

}  // namespace ndl::kernels::avx2
