#include "doctest.h"

#include "nilcap/kernels.hpp"

#include <random>
#include <vector>

using namespace nilcap;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match the textbook formula") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 32749u, 2147483647u}) {
    auto y = random_residues(rng, 37, p), x = random_residues(rng, 37, p);
    std::uint32_t a = random_residues(rng, 1, p)[0];
    auto want = y;
    for (std::size_t i = 0; i < y.size(); ++i)
      want[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
    kernels::scalar::axpy_mod(y, x, a, p);
    CHECK(y == want);
    for (auto& w : want) w = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * w) % p);
    kernels::scalar::scale_mod(y, a, p);
    CHECK(y == want);
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2::compiled() || kernels::detected_level() != kernels::SimdLevel::Avx2) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(11);
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 251, 4093, 32749};
  for (std::uint32_t p : primes) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto y = random_residues(rng, n, p), x = random_residues(rng, n, p);
        std::uint32_t a = random_residues(rng, 1, p)[0];
        auto ys = y, yv = y;
        kernels::scalar::axpy_mod(ys, x, a, p);
        kernels::avx2::axpy_mod(yv, x, a, p);
        REQUIRE(ys == yv);
        kernels::scalar::scale_mod(ys, a, p);
        kernels::avx2::scale_mod(yv, a, p);
        REQUIRE(ys == yv);
      }
    }
    // Extremal residues exercise the Barrett correction step.
    std::vector<std::uint32_t> y(16, p - 1), x(16, p - 1), ys = y, yv = y;
    kernels::scalar::axpy_mod(ys, x, p - 1, p);
    kernels::avx2::axpy_mod(yv, x, p - 1, p);
    CHECK(ys == yv);
  }
}

TEST_CASE("dispatch honours forced levels") {
  const auto before = kernels::active_level();
  kernels::set_level(kernels::SimdLevel::Scalar);
  CHECK(kernels::active_level() == kernels::SimdLevel::Scalar);
  std::vector<std::uint32_t> y{1, 2, 3}, x{4, 0, 1};
  kernels::axpy_mod(y, x, 2, 5);
  CHECK(y == std::vector<std::uint32_t>{4, 2, 0});
  if (kernels::detected_level() == kernels::SimdLevel::Avx2) {
    kernels::set_level(kernels::SimdLevel::Avx2);
    std::vector<std::uint32_t> z{1, 2, 3};
    kernels::axpy_mod(z, x, 2, 5);
    CHECK(z == std::vector<std::uint32_t>{4, 2, 0});
  } else {
    CHECK_THROWS(kernels::set_level(kernels::SimdLevel::Avx2));
  }
  kernels::set_level(before);
  CHECK(std::string(kernels::level_name(kernels::SimdLevel::Avx2)) == "avx2");
}
