#include "dualhs/field.hpp"

#include <limits>

namespace dualhs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " +
                                std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string rest;
  if (text.rfind("Fp:", 0) == 0 || text.rfind("Fp ", 0) == 0) {
    rest = text.substr(3);
  } else if (text == "Fp") {
    return prime(kDefaultPrime);
  } else {
    throw std::invalid_argument("unknown field '" + text + "'");
  }
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(rest, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad prime in field '" + text + "'");
  }
  if (used != rest.size() || p > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("bad prime in field '" + text + "'");
  return prime(static_cast<std::uint32_t>(p));
}

namespace {

std::uint32_t reduce_signed(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mpz_residue(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }
Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long long value) {
  Scalar s;
  if (field.is_rational()) {
    s.rational_ = mpq_class(static_cast<long>(value));
  } else {
    s.modulus_ = field.characteristic();
    s.residue_ = reduce_signed(value, s.modulus_);
  }
  return s;
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& value) {
  Scalar s;
  if (field.is_rational()) {
    s.rational_ = value;
    s.rational_.canonicalize();
    return s;
  }
  s.modulus_ = field.characteristic();
  const std::uint32_t den = mpz_residue(value.get_den(), s.modulus_);
  if (den == 0)
    throw std::domain_error("denominator divisible by the field characteristic");
  const std::uint32_t num = mpz_residue(value.get_num(), s.modulus_);
  s.residue_ = static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(num) * power_mod(den, s.modulus_ - 2, s.modulus_) %
      s.modulus_);
  return s;
}

Scalar Scalar::random_nonzero(const Field& field, Rng& rng) {
  if (field.is_rational()) {
    long long v = static_cast<long long>(rng() % 64) - 32;
    if (v >= 0) ++v;
    return from_int(field, v);
  }
  const std::uint32_t p = field.characteristic();
  return from_int(field, 1 + static_cast<long long>(rng() % (p - 1)));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ != 0) {
    s.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  } else {
    s.rational_ = -rational_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (modulus_ != 0) {
    s.residue_ = power_mod(residue_, modulus_ - 2, modulus_);
  } else {
    s.rational_ = 1 / rational_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same(other);
  if (modulus_ != 0) {
    std::uint32_t r = residue_ + other.residue_;
    if (r >= modulus_) r -= modulus_;
    residue_ = r;
  } else {
    rational_ += other.rational_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same(other);
  if (modulus_ != 0) {
    residue_ = residue_ >= other.residue_ ? residue_ - other.residue_
                                          : residue_ + modulus_ - other.residue_;
  } else {
    rational_ -= other.rational_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same(other);
  if (modulus_ != 0) {
    residue_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(residue_) *
                                          other.residue_ % modulus_);
  } else {
    rational_ *= other.rational_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ != 0 ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

bool Scalar::to_int(long long& out) const {
  if (modulus_ != 0) {
    out = residue_ > modulus_ / 2 ? static_cast<long long>(residue_) - modulus_
                                  : static_cast<long long>(residue_);
    return true;
  }
  if (rational_.get_den() != 1 || !rational_.get_num().fits_slong_p()) return false;
  out = rational_.get_num().get_si();
  return true;
}

bool Scalar::prints_negative() const {
  if (modulus_ != 0) return residue_ > modulus_ / 2;
  return sgn(rational_) < 0;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) {
    long long v = 0;
    to_int(v);
    return std::to_string(v);
  }
  return rational_.get_str();
}

}  // namespace dualhs
