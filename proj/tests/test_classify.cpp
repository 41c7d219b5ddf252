#include "doctest.h"
#include "nilcap/classify.hpp"

using namespace nilcap;

namespace {

const FieldSpec Q = FieldSpec::rationals();

VerifyOptions small_options() {
  VerifyOptions o;
  o.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  o.random_samples = 20;
  o.central_lines = 5;
  return o;
}

void require_all_pass(const std::vector<Check>& checks) {
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    CAPTURE(c.group);
    CAPTURE(c.name);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("structural verdicts for small examples") {
  Verdict v = capability_structural(direct_sum(heisenberg(Q, 1), abelian(Q, 3)));
  CHECK(v.capable);
  CHECK(v.family_label == "H(1) (+) A(3)");

  v = capability_structural(direct_sum(build("L5_5", Q), abelian(Q, 2)));
  CHECK(v.capable);
  CHECK(v.family_label == "L5_5 (+) A(2)");

  v = capability_structural(build("L6_10", Q));
  CHECK_FALSE(v.capable);
  CHECK_FALSE(v.family_label.has_value());

  CHECK_FALSE(capability_structural(abelian(Q, 1)).capable);
  CHECK(capability_structural(abelian(Q, 2)).capable);
  CHECK_FALSE(capability_structural(heisenberg(Q, 2)).capable);
  CHECK(capability_structural(build("L27A", Q)).family_label == "L27A");
  CHECK_FALSE(capability_structural(build("L27B", Q)).capable);
  CHECK(capability_structural(direct_sum(build("L5_8", Q), abelian(Q, 1))).family_label == "L5_8 (+) A(1)");
}

TEST_CASE("structural verdicts: scope") {
  CHECK_THROWS_AS(capability_structural(build("L6_13", Q)), OutOfScope);
  CHECK_THROWS_AS(capability_structural(build("L5_7", Q)), OutOfScope);
  LieAlgebra L(Q, 2);
  L.set_bracket(0, 1, unit_vector(Q, 2, 1));
  CHECK_THROWS_AS(capability_structural(L), NotNilpotent);
}

TEST_CASE("structural verdicts match the exterior center beyond the catalog") {
  // Quotients of catalog algebras by central lines and a few sums outside the
  // catalog, wherever dim L^2 <= 2.
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    std::vector<LieAlgebra> pool{direct_sum(heisenberg(f, 1), heisenberg(f, 1)),
                                 direct_sum(direct_sum(heisenberg(f, 1), heisenberg(f, 1)), abelian(f, 1)),
                                 direct_sum(heisenberg(f, 2), abelian(f, 2))};
    for (const auto& L : catalog_instances(f, true)) {
      Subspace z = center(L);
      for (const auto& v : z.basis_vectors()) pool.push_back(quotient(L, Subspace::span(f, L.dim(), {v})).algebra);
    }
    std::size_t in_scope = 0;
    for (const auto& L : pool) {
      if (derived_algebra(L).dim() > 2) continue;
      ++in_scope;
      CAPTURE(L.name());
      CHECK(capability_structural(L).capable == is_capable(L));
    }
    CHECK(in_scope >= 15);
  }
}

TEST_CASE("fingerprints") {
  Fingerprint fp = fingerprint(build("L4_3", Q));
  CHECK(fp.nilpotency_class == 3);
  CHECK(fp.lower_series == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(fp.upper_series == std::vector<std::size_t>{0, 1, 2, 4});
  CHECK(fp.stem);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(fingerprint(abelian(Q, n)).dim_multiplier == n * (n - 1) / 2);

  Fingerprint a = fingerprint(build("L27A", Q)), b = fingerprint(build("L27B", Q));
  CHECK_FALSE(a == b);
  CHECK(a.dim_exterior_center == 0);
  CHECK(b.dim_exterior_center > 0);
  CHECK(a.generalized_heisenberg);
  CHECK(b.generalized_heisenberg);
  CHECK(fingerprint(build("L5_5", Q)) == fingerprint(build("L5_5", Q)));
}

TEST_CASE("workbench caches by structure table") {
  Workbench wb;
  LieAlgebra L = build("L5_5", Q);
  const InstanceRecord& r = wb.analyze(L);
  CHECK(r.homology.dim_M == 4);
  CHECK(r.identities_hold);
  LieAlgebra renamed = L;
  renamed.set_name("other");
  wb.analyze(renamed);
  CHECK(wb.instances().size() == 1);
  wb.analyze(build("L5_5", FieldSpec::prime(2)));
  CHECK(wb.instances().size() == 2);
}

TEST_CASE("check groups pass on a reduced configuration") {
  const VerifyOptions o = small_options();
  Workbench wb;
  require_all_pass(check_multipliers(wb, o));
  require_all_pass(check_class2_capability(wb, o));
  require_all_pass(check_class3_capability(wb, o));
  require_all_pass(check_quotient_witnesses(o));
  require_all_pass(check_central_ideals(wb, o));
  require_all_pass(check_central_products(wb, o));
  require_all_pass(check_free_algebras(o));
  require_all_pass(check_structural_agreement(wb, o));
  require_all_pass(check_random_samples(wb, o));
  require_all_pass(check_structure_extras(wb, o));
  require_all_pass(check_identities(wb));
}

TEST_CASE("group selection and missing groups") {
  VerifyOptions o;
  o.fields = {FieldSpec::prime(3)};
  o.random_samples = 0;
  o.central_lines = 2;
  VerifyReport r = verify_all(o);
  CHECK(r.all_passed());
  CHECK(r.group_passed("C1"));
  CHECK_FALSE(r.group_passed("C9"));  // no GF(2) in the field list: group is empty
  CHECK_FALSE(r.group_passed("no such group"));
}

TEST_CASE("a wrong expectation is reported as a failure, not hidden") {
  VerifyReport r;
  Check c;
  c.group = "X";
  c.passed = false;
  r.checks.push_back(c);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.group_passed("X"));
}
