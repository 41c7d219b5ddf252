#include "nilcap/field.hpp"

#include <charconv>
#include <limits>
#include <vector>

namespace nilcap {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw FieldError("not a supported prime: " + std::to_string(p));
  return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "gf2") return prime(2);
  if (text == "gf3") return prime(3);
  if (text == "gf5") return prime(5);
  if (text.starts_with("gfp:")) {
    auto digits = text.substr(4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw FieldError("malformed field id: " + std::string(text));
    return prime(p);
  }
  throw FieldError("unknown field id: " + std::string(text));
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw FieldError("division by zero");
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw FieldError("element not invertible");
  std::int64_t v = s0 % static_cast<std::int64_t>(p);
  if (v < 0) v += p;
  return static_cast<std::uint32_t>(v);
}

namespace {

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

void require_same(const Scalar& a, const Scalar& b) {
  bool same = a.holds_rational() ? b.holds_rational()
                                 : !b.holds_rational() && a.modulus() == b.modulus();
  if (!same)
    throw FieldError("mixed fields: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.is_rational()) return Scalar(mpq_class(0));
  return Scalar(Residue{0, f.p()});
}

Scalar Scalar::one(const FieldSpec& f) {
  if (f.is_rational()) return Scalar(mpq_class(1));
  return Scalar(Residue{1 % f.p(), f.p()});
}

Scalar Scalar::from_int(long long v, const FieldSpec& f) {
  if (f.is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(f.p());
  if (r < 0) r += f.p();
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.p()});
}

Scalar Scalar::from_rational(const mpq_class& q, const FieldSpec& f) {
  return normalize(q.get_num(), q.get_den(), f);
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  auto bad = [&] { return FieldError("malformed scalar: \"" + std::string(text) + "\""); };
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return normalize(parse_int(text), 1, f);
  return normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)), f);
}

FieldSpec Scalar::field() const {
  if (holds_rational()) return FieldSpec::rationals();
  return FieldSpec(FieldKind::PrimeField, std::get<Residue>(value_).p);
}

bool Scalar::is_zero() const {
  if (holds_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (holds_rational()) return rational() == 1;
  return residue() == 1;
}

std::string Scalar::to_string() const {
  if (holds_rational()) return rational().get_str();
  return std::to_string(residue());
}

Scalar Scalar::operator-() const {
  if (holds_rational()) return Scalar(mpq_class(-rational()));
  auto r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(*this, o);
  if (holds_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + o.residue()) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(*this, o);
  if (holds_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} * o.residue()) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= invert(o); }

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

Scalar normalize(const mpz_class& numerator, const mpz_class& denominator,
                 const FieldSpec& f) {
  if (f.is_rational()) {
    if (denominator == 0) throw FieldError("zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint32_t den = reduce_mod(denominator, f.p());
  if (den == 0) throw FieldError("denominator not invertible mod " + std::to_string(f.p()));
  std::uint32_t num = reduce_mod(numerator, f.p());
  auto v = static_cast<std::uint32_t>(std::uint64_t{num} * inverse_mod(den, f.p()) % f.p());
  return Scalar(Residue{v, f.p()});
}

Scalar invert(const Scalar& x) {
  if (x.is_zero()) throw FieldError("division by zero");
  if (x.holds_rational()) return Scalar::from_rational(1 / x.rational(), FieldSpec::rationals());
  return Scalar(Residue{inverse_mod(x.residue(), x.modulus()), x.modulus()});
}

Scalar find_omega(const FieldSpec& f) {
  if (f.characteristic() != 2)
    throw FieldError("omega requires characteristic 2, got " + f.name());
  const std::uint32_t p = f.p();
  std::vector<bool> image(p, false);
  for (std::uint64_t x = 0; x < p; ++x) image[(x * x + x) % p] = true;
  for (std::uint32_t w = 0; w < p; ++w)
    if (!image[w]) return Scalar::from_int(w, f);
  throw FieldError("no element outside {x^2 + x} in " + f.name());
}

}  // namespace nilcap
