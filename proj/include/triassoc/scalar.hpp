#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace triassoc {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were drawn from different ground fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operand shapes or ambient dimensions disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

namespace lin {

class Scalar;

/// Ground field descriptor: the rationals, or the prime field F_p.
///
/// Moduli are limited to primes below 2^31 so residue products fit in 64 bits.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Parses "p/q" or an integer literal into this field.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus_ = 0;
};

/// Exact field element. Rationals are kept reduced with positive denominator
/// (GMP canonical form); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class value);

  static Scalar residue(std::int64_t value, std::uint64_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// this += a * b without a temporary for the common elimination step.
  void add_product(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& other) const;

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_{mpq_class{0}};
};

}  // namespace lin
}  // namespace triassoc
