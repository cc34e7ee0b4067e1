#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dtqft {

/// Thrown when scalars or matrices over different fields meet in one operation.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Scalar;

/// The ground field: either the rationals or Z/p for a prime p < 2^32.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint64_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept canonical by GMP (lowest
/// terms, positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT: integers promote to rationals
  explicit Scalar(mpq_class value);

  static Scalar from_int(Field field, long value);
  static Scalar from_rational(Field field, const mpq_class& value);
  static Scalar zero(Field field) { return from_int(field, 0); }
  static Scalar one(Field field) { return from_int(field, 1); }
  /// Parses "p/q" or "p"; the denominator must be invertible in the field.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return Field{modulus_}; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : residue_ == 0; }
  bool is_one() const { return modulus_ == 0 ? q_ == 1 : residue_ == 1; }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// Only valid over the rationals.
  const mpq_class& rational() const;
  std::uint64_t residue() const { return residue_; }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q", or "p" when the denominator is 1. Residues print as integers.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  std::uint64_t modulus_ = 0;
  std::uint64_t residue_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dtqft
