// Compiled with -mavx2. Only reached through the dispatcher after a CPU check.

#include "nilcap/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace nilcap::kernels::avx2 {

#if defined(__AVX2__)

namespace {

// Barrett reduction of eight lanes t < 2^31 with m = floor(2^32 / p).
// The estimate undershoots by at most one multiple of p.
inline __m256i reduce(__m256i t, __m256i m, __m256i vp, __m256i pm1) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, m), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), m);
  __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  __m256i over = _mm256_cmpgt_epi32(r, pm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(over, vp));
}

}  // namespace

bool compiled() { return true; }

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size();
  const auto m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(t, vm, vp, pm1));
  }
  scalar::axpy_mod(y.subspan(i), x.subspan(i), a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size();
  const auto m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i t = _mm256_mullo_epi32(va, vy);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(t, vm, vp, pm1));
  }
  scalar::scale_mod(y.subspan(i), a, p);
}

#else

bool compiled() { return false; }

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p) {
  scalar::axpy_mod(y, x, a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  scalar::scale_mod(y, a, p);
}

#endif

}  // namespace nilcap::kernels::avx2
