#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "nilcap/kernels.hpp"

namespace nilcap::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool avx2_usable() { return avx2::compiled() && cpu_has_avx2(); }

SimdLevel initial_level() {
  if (const char* env = std::getenv("NILCAP_SIMD")) {
    std::string_view v(env);
    if (v == "scalar") return SimdLevel::Scalar;
    if (v == "avx2" && avx2_usable()) return SimdLevel::Avx2;
  }
  return detected_level();
}

SimdLevel& current() {
  static SimdLevel level = initial_level();
  return level;
}

}  // namespace

const char* level_name(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "unknown";
}

SimdLevel detected_level() { return avx2_usable() ? SimdLevel::Avx2 : SimdLevel::Scalar; }

SimdLevel active_level() { return current(); }

void set_level(SimdLevel level) {
  if (level == SimdLevel::Avx2 && !avx2_usable())
    throw std::runtime_error("AVX2 kernels not available on this machine");
  current() = level;
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p) {
  if (a == 0) return;
  if (current() == SimdLevel::Avx2 && p < kAvx2MaxPrime)
    avx2::axpy_mod(y, x, a, p);
  else
    scalar::axpy_mod(y, x, a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  if (current() == SimdLevel::Avx2 && p < kAvx2MaxPrime)
    avx2::scale_mod(y, a, p);
  else
    scalar::scale_mod(y, a, p);
}

}  // namespace nilcap::kernels
