// Free presentations L = F/R and the invariants read off them: the Schur
// multiplier (R ∩ F^2)/[R,F], the exterior square F^2/[R,F], and the exterior
// center {z : [s(z), F] ⊆ [R,F]} for a section s of F -> L.
//
// F is the free nilpotent algebra of class cl(L) + 1 on dim L/L^2
// generators. Degrees above cl(L) + 1 can be dropped: they lie in [R,F]
// for the untruncated free algebra, so neither quotient changes.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "nilcap/freelie.hpp"
#include "nilcap/liealg.hpp"

namespace nilcap {

struct Presentation {
  std::shared_ptr<const LieAlgebra> L;
  FreeNilpotent F;
  Hom pi;           // F -> L
  Subspace R;       // ker pi
  Subspace RF;      // [R, F]
  Subspace RcapF2;  // R ∩ F^2
  Matrix section;   // dim F x dim L, pi * section = identity
};

struct PresentationOptions {
  /// When set, generator images are shifted by random elements of L^2 and the
  /// section by random elements of R. Results must not depend on this.
  std::optional<std::uint64_t> perturb_seed;
  std::size_t max_free_dim = kDefaultFreeDimLimit;
};

/// Throws NotNilpotent for non-nilpotent L. L must have positive dimension.
Presentation free_presentation(std::shared_ptr<const LieAlgebra> L, const PresentationOptions& opts = {});

std::size_t multiplier_dim(const Presentation& P);
std::size_t exterior_square_dim(const Presentation& P);
Subspace exterior_center(const Presentation& P);

/// [R,F] spanned by [r, h] over a basis of R and the whole Hall basis. Slower
/// than the generator-only span stored in the presentation; kept as a reference.
Subspace relation_commutator_full(const Presentation& P);
/// Exterior center tested against every Hall basis element, not only generators.
Subspace exterior_center_full(const Presentation& P);

struct HomologyReport {
  std::size_t dim_M = 0;
  std::size_t dim_exterior_square = 0;
  Subspace exterior_center;  // inside L
  bool capable = false;
};

/// All homological invariants from one presentation. The zero algebra has
/// trivial invariants and counts as capable.
HomologyReport homology(const LieAlgebra& L, const PresentationOptions& opts = {});

std::size_t schur_multiplier_dim(const LieAlgebra& L);
std::size_t exterior_square_dim(const LieAlgebra& L);
Subspace exterior_center(const LieAlgebra& L);
bool is_capable(const LieAlgebra& L);

struct CentralIdealTest {
  std::int64_t lhs;  // dim M(L)
  std::int64_t rhs;  // dim M(L/I) - dim(L^2 ∩ I)
  bool contained;    // I ⊆ Z^∧(L)
};

/// Compares dim M(L) with dim M(L/I) - dim(L^2 ∩ I) for a central ideal I.
/// The two agree exactly when I lies in the exterior center.
CentralIdealTest central_ideal_test(const LieAlgebra& L, const Subspace& I);

}  // namespace nilcap
