// Row operations over GF(p) used by elimination.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. The variants must agree bit-for-bit; the
// kernel tests enforce that on random inputs.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace nilcap::kernels {

enum class SimdLevel { Scalar, Avx2 };

const char* level_name(SimdLevel level);

/// Best level available on this machine (honours NILCAP_SIMD=scalar|avx2).
SimdLevel detected_level();
SimdLevel active_level();
/// Forces a level; throws std::runtime_error if the CPU or build lacks it.
void set_level(SimdLevel level);

/// The AVX2 kernels keep products in 32-bit lanes, so they only handle p below
/// this bound. Larger primes fall back to the scalar reference.
inline constexpr std::uint32_t kAvx2MaxPrime = 1u << 15;

/// y[i] = (y[i] + a * x[i]) mod p. Entries and a must lie in [0, p).
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);

/// y[i] = (a * y[i]) mod p.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool compiled();
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace avx2

}  // namespace nilcap::kernels
