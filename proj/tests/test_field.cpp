#include "doctest.h"

#include "nilcap/field.hpp"

#include <vector>

using namespace nilcap;

namespace {

std::vector<Scalar> all_elements(const FieldSpec& f) {
  std::vector<Scalar> out;
  for (std::uint32_t v = 0; v < f.p(); ++v) out.push_back(Scalar::from_int(v, f));
  return out;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively in small prime fields") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f = FieldSpec::prime(p);
    auto els = all_elements(f);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (const auto& a : els) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) CHECK(a * invert(a) == one);
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        for (const auto& c : els) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("normalize maps fractions into the field") {
  FieldSpec gf5 = FieldSpec::prime(5);
  // 3/4 in GF(5): 4^{-1} = 4, so 3 * 4 = 12 = 2.
  CHECK(normalize(3, 4, gf5).residue() == 2);
  CHECK(normalize(-3, 4, gf5).residue() == 3);
  CHECK(Scalar::parse("3/4", gf5) == Scalar::from_int(2, gf5));
  CHECK_THROWS_AS(normalize(1, 5, gf5), FieldError);
  CHECK_THROWS_AS(normalize(1, 0, FieldSpec::rationals()), FieldError);

  FieldSpec q = FieldSpec::rationals();
  Scalar x = normalize(6, -4, q);
  CHECK(x.to_string() == "-3/2");
  CHECK(Scalar::parse("-3/2", q) == x);
  CHECK(Scalar::parse("4/2", q).to_string() == "2");
}

TEST_CASE("field specs parse and reject bad input") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("gf3").p() == 3);
  CHECK(FieldSpec::parse("gfp:7").p() == 7);
  CHECK(FieldSpec::parse("gf5").name() == "GF(5)");
  CHECK(FieldSpec::rationals().name() == "Q");
  CHECK_THROWS_AS(FieldSpec::parse("gfp:9"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("r"), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(invert(Scalar::zero(FieldSpec::prime(3))), FieldError);
  CHECK_THROWS_AS(Scalar::parse("1/x", FieldSpec::rationals()), FieldError);
}

TEST_CASE("mixing fields is an error") {
  Scalar a = Scalar::one(FieldSpec::prime(3));
  Scalar b = Scalar::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(a + b, FieldError);
  CHECK_THROWS_AS(a * Scalar::one(FieldSpec::rationals()), FieldError);
}

TEST_CASE("omega lies outside the image of x^2 + x") {
  FieldSpec gf2 = FieldSpec::prime(2);
  Scalar w = find_omega(gf2);
  for (const auto& x : all_elements(gf2)) CHECK(!(x * x + x == w));
  CHECK(w.is_one());
  CHECK_THROWS_AS(find_omega(FieldSpec::prime(3)), FieldError);
  CHECK_THROWS_AS(find_omega(FieldSpec::rationals()), FieldError);
}

TEST_CASE("inverse_mod agrees with brute force") {
  for (std::uint32_t p : {7u, 101u, 32749u}) {
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 300); ++a)
      CHECK((static_cast<std::uint64_t>(a) * inverse_mod(a, p)) % p == 1);
  }
}
