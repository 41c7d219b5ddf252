#include "doctest.h"
#include "nilcap/catalog.hpp"

using namespace nilcap;

namespace {

CatalogParams eps(const char* e) {
  CatalogParams p;
  p.eps = e;
  return p;
}

CatalogParams eta(const char* e) {
  CatalogParams p;
  p.eta = e;
  return p;
}

CatalogParams rank(std::size_t m) {
  CatalogParams p;
  p.m = m;
  return p;
}

}  // namespace

TEST_CASE("every catalog id builds, satisfies Jacobi and is nilpotent") {
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    for (const auto& name : catalog_names()) {
      CatalogParams p;
      p.n = 3;
      p.m = 2;
      if (name == "L6_22") {
        if (f.characteristic() == 2) continue;
        p.eps = "1";
      }
      if (name == "L6_7_2") {
        if (f.characteristic() != 2) continue;
        p.eta = "1";
      }
      CAPTURE(name);
      LieAlgebra L = build(name, f, p);
      CHECK(validate(L).ok);
      CHECK_NOTHROW(nilpotency_class(L));
    }
  }
}

TEST_CASE("dimensions and invariants of named algebras") {
  const FieldSpec q = FieldSpec::rationals();
  struct Row {
    const char* name;
    std::size_t dim, cls, derived, center;
  };
  for (const Row& r : {Row{"L4_3", 4, 3, 2, 1}, Row{"L5_5", 5, 3, 2, 1}, Row{"L5_7", 5, 4, 3, 1},
                       Row{"L5_8", 5, 2, 2, 2}, Row{"L6_10", 6, 3, 2, 1}, Row{"L6_13", 6, 4, 3, 1},
                       Row{"L27A", 7, 2, 2, 2}, Row{"L27B", 7, 2, 2, 2}}) {
    CAPTURE(r.name);
    LieAlgebra L = build(r.name, q);
    CHECK(L.dim() == r.dim);
    CHECK(nilpotency_class(L) == r.cls);
    CHECK(derived_algebra(L).dim() == r.derived);
    CHECK(center(L).dim() == r.center);
  }
  CHECK(build("L4_3+H", q, rank(1)).dim() == 6);
  CHECK(build("L4_3+H", q, rank(2)).dim() == 8);
  CHECK(build("L5_5+H", q, rank(2)).dim() == 9);
  CHECK(build("L5_5+H", q, rank(2)).name() == "L5_5+H(2)");
  CHECK(build("A", q, CatalogParams{4, 1, {}, {}}).name() == "A(4)");
  CHECK(heisenberg(q, 3).dim() == 7);
}

TEST_CASE("generalized Heisenberg members of rank 2") {
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    LieAlgebra L = build("L6_22", f, eps("2"));
    CHECK(derived_algebra(L) == center(L));
    CHECK(derived_algebra(L).dim() == 2);
  }
  LieAlgebra M = build("L6_7_2", FieldSpec::prime(2), eta("0"));
  CHECK(derived_algebra(M) == center(M));
}

TEST_CASE("parameter spellings that name the same field element give the same table") {
  const FieldSpec f = FieldSpec::prime(3);
  LieAlgebra a = build("L6_22", f, eps("2")), b = build("L6_22", f, eps("-1"));
  CHECK(a.same_table(b));
  CHECK(a.name() == "L6_22(2)");
}

TEST_CASE("characteristic and parameter errors") {
  CHECK_THROWS_AS(build("L6_22", FieldSpec::prime(2), eps("1")), CatalogError);
  CHECK_THROWS_AS(build("L6_7_2", FieldSpec::rationals(), eta("0")), CatalogError);
  CHECK_THROWS_AS(build("L6_7_2", FieldSpec::prime(3), eta("0")), CatalogError);
  CHECK_THROWS_AS(build("L6_22", FieldSpec::rationals()), CatalogError);
  CHECK_THROWS_AS(build("L6_22", FieldSpec::rationals(), eps("1/0")), CatalogError);
  CHECK_THROWS_AS(build("L9_9", FieldSpec::rationals()), CatalogError);
  CHECK_THROWS_AS(build("H", FieldSpec::rationals(), rank(0)), CatalogError);
  CHECK_THROWS_AS(build("L5_5+H", FieldSpec::rationals(), rank(0)), CatalogError);
}

TEST_CASE("random generalized Heisenberg sampler") {
  const FieldSpec f = FieldSpec::prime(2);
  SampleResult a = random_gen_heisenberg(7, 2, f, 42), b = random_gen_heisenberg(7, 2, f, 42);
  CHECK(a.algebra.same_table(b.algebra));
  CHECK(a.draws == b.draws);
  const Subspace target = Subspace::coordinate(f, 7, {5, 6});
  std::size_t distinct = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SampleResult s = random_gen_heisenberg(7, 2, f, seed);
    CHECK(derived_algebra(s.algebra) == target);
    CHECK(center(s.algebra) == target);
    CHECK(validate(s.algebra).ok);
    distinct += !s.algebra.same_table(a.algebra);
  }
  CHECK(distinct >= 9);
  CHECK_THROWS_AS(random_gen_heisenberg(6, 2, f, 1), CatalogError);
  CHECK_THROWS_AS(random_gen_heisenberg(7, 2, FieldSpec::rationals(), 1), CatalogError);
}
