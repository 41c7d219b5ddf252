#include "doctest.h"
#include "nilcap/catalog.hpp"
#include "nilcap/schur.hpp"

using namespace nilcap;

namespace {

const std::vector<FieldSpec> kFields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};

std::vector<LieAlgebra> sample_algebras(const FieldSpec& f) {
  std::vector<LieAlgebra> out{heisenberg(f, 1), heisenberg(f, 2), build("L4_3", f), build("L5_5", f),
                              build("L5_7", f), build("L5_8", f), build("L6_10", f), build("L6_13", f),
                              build("L27A", f), build("L27B", f)};
  if (f.characteristic() == 2) {
    out.push_back(build("L6_7_2", f, CatalogParams{0, 1, std::nullopt, "1"}));
  } else {
    out.push_back(build("L6_22", f, CatalogParams{0, 1, "-1", std::nullopt}));
  }
  return out;
}

}  // namespace

TEST_CASE("abelian algebras: M(A(n)) = L∧L has dimension n(n-1)/2 and A(n) is capable for n > 1") {
  for (const auto& f : kFields)
    for (std::size_t n = 1; n <= 5; ++n) {
      HomologyReport h = homology(abelian(f, n));
      CHECK(h.dim_M == n * (n - 1) / 2);
      CHECK(h.dim_exterior_square == h.dim_M);
      CHECK(h.capable == (n > 1));
    }
}

TEST_CASE("Heisenberg multipliers follow 2m^2 - m - 1 for m >= 2 and equal 2 for m = 1") {
  for (const auto& f : kFields) {
    CHECK(schur_multiplier_dim(heisenberg(f, 1)) == 2);
    for (std::size_t m = 2; m <= 3; ++m) CHECK(schur_multiplier_dim(heisenberg(f, m)) == 2 * m * m - m - 1);
  }
}

TEST_CASE("presentation of H(1): F(2,3) with relations in the top degree") {
  const FieldSpec q = FieldSpec::rationals();
  Presentation P = free_presentation(std::make_shared<const LieAlgebra>(heisenberg(q, 1)));
  CHECK(P.F.dim() == 5);
  CHECK(P.R.dim() == 2);
  CHECK(P.RF.dim() == 0);
  CHECK(P.RcapF2.dim() == 2);
  CHECK(multiplier_dim(P) == 2);
  CHECK(exterior_square_dim(P) == 3);
}

TEST_CASE("presentation invariants: pi is onto, the section splits it, RF <= R∩F^2 <= R") {
  for (const auto& f : kFields)
    for (const auto& L : sample_algebras(f)) {
      CAPTURE(L.name());
      Presentation P = free_presentation(std::make_shared<const LieAlgebra>(L));
      CHECK(is_bracket_compatible(P.pi));
      CHECK(P.pi.matrix * P.section == Matrix::identity(f, L.dim()));
      CHECK(P.R == kernel(P.pi.matrix));
      CHECK(P.R.contains(P.RcapF2));
      CHECK(P.RcapF2.contains(P.RF));
    }
}

TEST_CASE("generator-only [R,F] and exterior center agree with the full-basis versions") {
  for (const auto& f : kFields)
    for (const auto& L : sample_algebras(f)) {
      CAPTURE(L.name());
      CAPTURE(f.name());
      Presentation P = free_presentation(std::make_shared<const LieAlgebra>(L));
      CHECK(relation_commutator_full(P) == P.RF);
      CHECK(exterior_center_full(P) == exterior_center(P));
    }
}

TEST_CASE("results do not depend on the chosen generators or section") {
  for (const auto& f : kFields)
    for (const auto& L : sample_algebras(f)) {
      CAPTURE(L.name());
      HomologyReport base = homology(L);
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        PresentationOptions opts;
        opts.perturb_seed = seed;
        HomologyReport h = homology(L, opts);
        CHECK(h.dim_M == base.dim_M);
        CHECK(h.dim_exterior_square == base.dim_exterior_square);
        CHECK(h.exterior_center == base.exterior_center);
      }
    }
}

TEST_CASE("dim L∧L = dim M + dim L^2 and Z^ lies in Z(L) ∩ L^2") {
  for (const auto& f : kFields)
    for (const auto& L : sample_algebras(f)) {
      HomologyReport h = homology(L);
      Subspace d = derived_algebra(L);
      CHECK(h.dim_exterior_square == h.dim_M + d.dim());
      CHECK(center(L).contains(h.exterior_center));
      CHECK(d.contains(h.exterior_center));
    }
}

TEST_CASE("direct sums: M(A (+) B) = M(A) + M(B) + dim A/A^2 * dim B/B^2") {
  for (const auto& f : kFields) {
    auto algs = sample_algebras(f);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) {
        const LieAlgebra &A = algs[a], &B = algs[b];
        const std::size_t abA = A.dim() - derived_algebra(A).dim(), abB = B.dim() - derived_algebra(B).dim();
        CHECK(schur_multiplier_dim(direct_sum(A, B)) ==
              schur_multiplier_dim(A) + schur_multiplier_dim(B) + abA * abB);
      }
  }
}

TEST_CASE("exterior centers of named algebras") {
  const FieldSpec q = FieldSpec::rationals();
  LieAlgebra L610 = build("L6_10", q);
  CHECK(exterior_center(L610) == Subspace::coordinate(q, 6, {5}));
  CHECK(exterior_center(L610) == center(L610));
  CHECK(exterior_center(heisenberg(q, 2)) == center(heisenberg(q, 2)));
  CHECK(is_capable(build("L27A", q)));
  CHECK_FALSE(is_capable(build("L27B", q)));
  CHECK(schur_multiplier_dim(build("L27A", q)) == 9);
  CHECK(schur_multiplier_dim(build("L27B", q)) == 10);
}

TEST_CASE("zero algebra and size limits") {
  const FieldSpec q = FieldSpec::rationals();
  HomologyReport h = homology(abelian(q, 0));
  CHECK(h.capable);
  CHECK(h.dim_M == 0);
  CHECK_THROWS_AS(free_presentation(std::make_shared<const LieAlgebra>(abelian(q, 0))), LieError);
  PresentationOptions tight;
  tight.max_free_dim = 10;
  CHECK_THROWS(homology(build("L5_5", q), tight));
}

TEST_CASE("non-nilpotent input is rejected") {
  const FieldSpec q = FieldSpec::rationals();
  LieAlgebra L(q, 2, "affine");
  L.set_bracket(0, 1, unit_vector(q, 2, 1));  // [x, y] = y
  CHECK_THROWS_AS(homology(L), NotNilpotent);
}

TEST_CASE("central ideal test") {
  for (const auto& f : kFields) {
    LieAlgebra H1 = heisenberg(f, 1), H2 = heisenberg(f, 2);
    // H(1) is capable: its center is not in Z^ and the inequality is strict.
    CentralIdealTest t = central_ideal_test(H1, center(H1));
    CHECK(t.lhs == 2);
    CHECK(t.rhs == 0);
    CHECK_FALSE(t.contained);
    // H(2): Z^ = Z and equality holds, M(A(4)) - 1 = 5.
    t = central_ideal_test(H2, center(H2));
    CHECK(t.lhs == 5);
    CHECK(t.rhs == 5);
    CHECK(t.contained);
    CHECK_THROWS_AS(central_ideal_test(H1, Subspace::coordinate(f, 3, {0})), LieError);
  }
}
