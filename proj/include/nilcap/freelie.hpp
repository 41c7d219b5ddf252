// Free nilpotent Lie algebras F(d, c) on a Hall basis.
//
// Hall trees are ordered by degree and then lexicographically by their
// bracket string. A tree (l, r) belongs to the Hall set when l < r and r is
// either a generator or r = (r1, r2) with r1 <= l. Products of basis trees
// are rewritten into the basis with antisymmetry and the Jacobi identity;
// products of total degree above c vanish.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilcap/liealg.hpp"

namespace nilcap {

/// A Hall tree referenced by position in its basis list. Generators have
/// generator >= 0; brackets store the basis indices of their two factors.
struct HallTree {
  int generator = -1;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t degree = 1;

  bool is_generator() const { return generator >= 0; }
};

/// Integer combination of Hall basis elements, sorted by index.
struct IntTerm {
  std::size_t index;
  std::int64_t coeff;
  friend bool operator==(const IntTerm&, const IntTerm&) = default;
};
using IntCombination = std::vector<IntTerm>;

/// Number of Hall (equivalently Lyndon) basis elements of degree k on d letters.
std::uint64_t witt_dimension(std::size_t d, std::size_t k);

/// Complete Hall set up to degree c, ordered by (degree, bracket string).
std::vector<HallTree> hall_basis(std::size_t d, std::size_t c);

/// Bracket string such as "[[x1,x2],x1]" (generators are 1-based).
std::string hall_string(const std::vector<HallTree>& basis, std::size_t index);

struct FreeNilpotent {
  std::size_t d = 0;
  std::size_t c = 0;
  std::vector<HallTree> basis;
  std::vector<std::size_t> degree_offsets;  // basis indices of degree k: [offsets[k-1], offsets[k])
  /// Nonzero products [u, v] for u < v, keyed by u * dim() + v.
  std::unordered_map<std::uint64_t, IntCombination> products;
  std::shared_ptr<const LieAlgebra> algebra;

  std::size_t dim() const { return basis.size(); }
  std::size_t degree_begin(std::size_t k) const { return degree_offsets[k - 1]; }
  std::size_t degree_end(std::size_t k) const { return degree_offsets[k]; }
  /// Basis index of the k-th generator x_{k+1}.
  std::size_t generator(std::size_t k) const { return k; }
};

/// Expresses [u, v] for basis indices u, v in the Hall basis.
IntCombination normalize_bracket(const FreeNilpotent& F, std::size_t u, std::size_t v);

inline constexpr std::size_t kDefaultFreeDimLimit = 2000;

/// Throws LieError if the dimension would exceed max_dim.
FreeNilpotent free_nilpotent(std::size_t d, std::size_t c, const FieldSpec& field,
                             std::size_t max_dim = kDefaultFreeDimLimit);

/// Extends generator images to the homomorphism F -> L. Requires class(L) <= c.
Hom extend_hom(const FreeNilpotent& F, std::shared_ptr<const LieAlgebra> L,
               const std::vector<Element>& images);

}  // namespace nilcap
