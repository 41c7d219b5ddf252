// Exact scalars over the rationals and over prime fields GF(p).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace nilcap {

/// Raised for invalid arithmetic or malformed scalar input.
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class FieldKind { Rationals, PrimeField };

bool is_prime(std::uint64_t n);

/// The base field of every algebra: either Q or GF(p) with p prime.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  /// Throws FieldError if p is not a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  /// Parses "q", "gf2", "gf3", "gf5" or "gfp:P".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  /// Short human id: "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

struct Residue {
  std::uint32_t value;
  std::uint32_t p;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// A field element in canonical form. Rationals are kept reduced with a
/// positive denominator; residues live in [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long long v, const FieldSpec& f);
  static Scalar from_rational(const mpq_class& q, const FieldSpec& f);

  /// Parses "a" or "a/b" (decimal) into the given field.
  static Scalar parse(std::string_view text, const FieldSpec& f);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  bool holds_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }
  std::uint32_t modulus() const { return std::get<Residue>(value_).p; }

  /// Canonical decimal text: "a", "a/b", or the residue.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend Scalar normalize(const mpz_class&, const mpz_class&, const FieldSpec&);
  friend Scalar invert(const Scalar&);

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

/// Canonical element equal to numerator / denominator in the field.
Scalar normalize(const mpz_class& numerator, const mpz_class& denominator,
                 const FieldSpec& f);

/// Multiplicative inverse; throws FieldError on zero.
Scalar invert(const Scalar& x);

/// Least residue outside {x^2 + x : x in F}. Characteristic 2 only.
Scalar find_omega(const FieldSpec& f);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace nilcap
