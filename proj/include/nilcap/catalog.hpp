// Named nilpotent Lie algebras with their standard presentations. Basis
// indices follow the usual x1..xn numbering of each presentation.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilcap/liealg.hpp"

namespace nilcap {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogParams {
  std::size_t n = 0;  // A(n)
  std::size_t m = 1;  // H(m) and the central products with H(m)
  std::optional<std::string> eps;  // L6_22; any scalar, char != 2
  std::optional<std::string> eta;  // L6_7_2; 0 or omega, char 2
};

/// Known names: A, H, L4_3, L5_5, L5_7, L5_8, L6_7_2, L6_10, L6_13, L6_22,
/// L27A, L27B, and the central products L4_3+H (x4 glued to z, dim 2m+4)
/// and L5_5+H (x5 glued to z, dim 2m+5).
std::vector<std::string> catalog_names();

/// Throws CatalogError for unknown names and violated parameter or
/// characteristic constraints.
LieAlgebra build(std::string_view name, const FieldSpec& field, const CatalogParams& params = {});

LieAlgebra heisenberg(const FieldSpec& field, std::size_t m);

/// 7-dimensional algebras with L^2 = Z(L) of dimension 2 over a prime field,
/// drawn by sampling [x_i, x_j] (i < j <= 5) in span{x6, x7} and rejecting
/// draws until L^2 and Z(L) both equal that span.
struct SampleResult {
  LieAlgebra algebra;
  std::size_t draws;
};

inline constexpr std::size_t kDefaultRejectionBudget = 100000;

SampleResult random_gen_heisenberg(std::size_t dim, std::size_t rank, const FieldSpec& field,
                                   std::uint64_t seed, std::size_t budget = kDefaultRejectionBudget);

}  // namespace nilcap
