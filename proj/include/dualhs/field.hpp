#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace dualhs {

/// Deterministic pseudo-random source used for every generic choice.
using Rng = std::mt19937_64;

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Coefficient field: either the rationals or Z/p for a prime p < 2^31.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  /// "Q" or "Fp:<p>".
  std::string name() const;

  /// Parses "Q", "Fp:<p>" or "Fp <p>".
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long long value);
  static Scalar from_rational(const Field& field, const mpq_class& value);
  /// Nonzero element drawn from the field (integers in [-32, 32] over Q).
  static Scalar random_nonzero(const Field& field, Rng& rng);

  Field field() const {
    return modulus_ == 0 ? Field::rationals() : Field(Field::Kind::prime, modulus_);
  }
  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t residue() const { return residue_; }
  const mpq_class& rational() const { return rational_; }

  bool is_zero() const {
    return modulus_ != 0 ? residue_ == 0 : sgn(rational_) == 0;
  }
  bool is_one() const {
    return modulus_ != 0 ? residue_ == 1 : rational_ == 1;
  }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other) { return *this *= other.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Symmetric representative for residues, "p/q" for rationals.
  std::string to_string() const;
  /// True when the printed form starts with a minus sign.
  bool prints_negative() const;
  /// Small-integer value when representable (symmetric residue for Fp).
  bool to_int(long long& out) const;

 private:
  void check_same(const Scalar& other) const {
    if (modulus_ != other.modulus_) throw FieldMismatch("scalar field mismatch");
  }

  std::uint32_t modulus_ = 0;
  std::uint32_t residue_ = 0;
  mpq_class rational_;
};

}  // namespace dualhs
