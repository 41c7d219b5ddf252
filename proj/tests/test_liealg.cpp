#include "doctest.h"

#include "nilcap/liealg.hpp"

#include <random>

using namespace nilcap;

namespace {

Element e(const FieldSpec& f, std::size_t n, std::size_t i) { return unit_vector(f, n, i); }

// Heisenberg algebra of rank m on a1, b1, ..., am, bm, z with [a_l, b_l] = z.
LieAlgebra heisenberg(const FieldSpec& f, std::size_t m) {
  const std::size_t n = 2 * m + 1;
  LieAlgebra L(f, n, "H");
  for (std::size_t l = 0; l < m; ++l) L.set_bracket(2 * l, 2 * l + 1, e(f, n, n - 1));
  return L;
}

// [e1, e_i] = e_{i+1} for i = 2..n-1.
LieAlgebra filiform(const FieldSpec& f, std::size_t n) {
  LieAlgebra L(f, n, "filiform");
  for (std::size_t i = 1; i + 1 < n; ++i) L.set_bracket(0, i, e(f, n, i + 1));
  return L;
}

// {x : [x, L] inside S}, computed vector by vector over GF(2) by enumeration.
std::size_t count_centralizing_mod(const LieAlgebra& L, const Subspace& s) {
  const std::size_t n = L.dim();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Element x = zero_vector(L.field(), n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) x[i] = Scalar::one(L.field());
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = s.contains(bracket(L, x, e(L.field(), n, j)));
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("brackets are antisymmetric and set_bracket validates input") {
  FieldSpec q = FieldSpec::rationals();
  LieAlgebra L = heisenberg(q, 1);
  CHECK(L.basis_bracket(1, 0) == SparseVector{Term{2, Scalar::from_int(-1, q)}});
  CHECK(L.basis_bracket(0, 0).empty());
  CHECK_THROWS_AS(L.set_bracket(1, 1, e(q, 3, 0)), LieError);
  CHECK_THROWS_AS(L.set_bracket(0, 5, e(q, 3, 0)), LieError);
  CHECK_THROWS_AS(L.set_bracket(0, 1, e(q, 4, 0)), LieError);
}

TEST_CASE("validate reports Jacobi failures") {
  FieldSpec q = FieldSpec::rationals();
  LieAlgebra good = filiform(q, 5);
  CHECK(validate(good).ok);
  LieAlgebra bad(q, 3);
  bad.set_bracket(0, 1, e(q, 3, 0));
  bad.set_bracket(1, 2, e(q, 3, 1));
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].i == 0);
  CHECK(rep.violations[0].k == 2);
}

TEST_CASE("series and centers of standard algebras") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    LieAlgebra H = heisenberg(f, 2);
    CHECK(nilpotency_class(H) == 2);
    CHECK(derived_algebra(H) == center(H));
    auto flags = structural_predicates(H);
    CHECK(flags.generalized_heisenberg);
    CHECK(flags.heisenberg_rank == 1);
    CHECK(flags.stem);
    CHECK_FALSE(flags.maximal_class);

    LieAlgebra F = filiform(f, 5);
    CHECK(nilpotency_class(F) == 4);
    CHECK(structural_predicates(F).maximal_class);
    auto lower = lower_central_series(F);
    REQUIRE(lower.size() == 5);
    CHECK(lower[1].dim() == 3);
    auto upper = upper_central_series(F);
    REQUIRE(upper.size() == 5);
    for (std::size_t i = 0; i < upper.size(); ++i) CHECK(upper[i].dim() == (i == 4 ? 5 : i));

    auto A = abelian(f, 3);
    CHECK(structural_predicates(A).abelian);
    CHECK(nilpotency_class(A) == 1);
    CHECK(center(A).is_full());
  }
}

TEST_CASE("upper central series matches the centralizer oracle over GF(2)") {
  FieldSpec f = FieldSpec::prime(2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    // Random strictly upper-triangular structure constants: [e_i, e_j] in span{e_k : k > j}.
    const std::size_t n = 6;
    LieAlgebra L(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Element v = zero_vector(f, n);
        for (std::size_t k = j + 1; k < n; ++k) v[k] = Scalar::from_int(rng() & 1, f);
        if (!is_zero(v)) L.set_bracket(i, j, v);
      }
    if (!validate(L).ok) continue;
    auto upper = upper_central_series(L);
    for (std::size_t i = 1; i < upper.size(); ++i)
      CHECK(count_centralizing_mod(L, upper[i - 1]) == (1ull << upper[i].dim()));
    CHECK(upper.size() == lower_central_series(L).size());
  }
}

TEST_CASE("non-nilpotent input is rejected") {
  FieldSpec q = FieldSpec::rationals();
  LieAlgebra L(q, 2);
  L.set_bracket(0, 1, e(q, 2, 1));  // [x, y] = y
  CHECK(validate(L).ok);
  CHECK_THROWS_AS(nilpotency_class(L), NotNilpotent);
  CHECK_THROWS_AS(upper_central_series(L), NotNilpotent);
  CHECK_THROWS_AS(stem_decompose(L), NotNilpotent);
}

TEST_CASE("quotients, direct sums and restrictions") {
  FieldSpec q = FieldSpec::rationals();
  LieAlgebra F = filiform(q, 5);
  Subspace z = center(F);
  Quotient Q = quotient(F, z);
  CHECK(Q.algebra.dim() == 4);
  CHECK(nilpotency_class(Q.algebra) == 3);
  CHECK(is_bracket_compatible(F, Q.algebra, Q.projection));
  CHECK_THROWS_AS(quotient(F, Subspace::coordinate(q, 5, {1})), LieError);

  LieAlgebra S = direct_sum(heisenberg(q, 1), abelian(q, 2));
  CHECK(S.dim() == 5);
  CHECK(center(S).dim() == 3);
  CHECK(S.name() == "H (+) A(2)");

  LieAlgebra sub = restrict_to(F, lower_central_series(F)[1]);
  CHECK(structural_predicates(sub).abelian);
  CHECK_THROWS_AS(restrict_to(F, Subspace::coordinate(q, 5, {0, 1})), LieError);
}

TEST_CASE("central product of two Heisenberg algebras is Heisenberg") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    LieAlgebra H = heisenberg(f, 1);
    CentralProduct cp = central_product(H, H, {{e(f, 3, 2), e(f, 3, 2)}});
    CHECK(cp.algebra.dim() == 5);
    auto flags = structural_predicates(cp.algebra);
    CHECK(flags.generalized_heisenberg);
    CHECK(flags.heisenberg_rank == 1);
    CHECK(subspace_intersect(cp.image_a, cp.image_b).dim() == 1);
    CHECK_THROWS_AS(central_product(H, H, {{e(f, 3, 0), e(f, 3, 2)}}), LieError);
  }
}

TEST_CASE("stem decomposition splits off the abelian factor") {
  FieldSpec f = FieldSpec::prime(5);
  LieAlgebra L = direct_sum(filiform(f, 4), direct_sum(heisenberg(f, 1), abelian(f, 2)));
  StemDecomposition sd = stem_decompose(L);
  CHECK(sd.abelian.dim() == 2);
  CHECK(sd.stem.dim() == 7);
  CHECK(structural_predicates(sd.stem).stem);
  CHECK(subspace_intersect(sd.stem_part, sd.abelian_part).is_zero());
  CHECK(subspace_sum(sd.stem_part, sd.abelian_part).is_full());
  CHECK(minimal_generators(L).dim() == 6);
}
