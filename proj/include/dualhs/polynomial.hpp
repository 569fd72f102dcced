#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualhs/field.hpp"

namespace dualhs {

inline constexpr std::size_t kMaxVariables = 8;

enum class TermOrder { grevlex, lex, glex };

std::string to_string(TermOrder order);
TermOrder parse_term_order(const std::string& text);

/// Variable names, coefficient field and term order of an ambient
/// polynomial ring. Variables are ordered x_0 > x_1 > ... .
class RingSignature {
 public:
  RingSignature(std::vector<std::string> variables, Field field,
                TermOrder order = TermOrder::grevlex);

  static std::shared_ptr<const RingSignature> make(std::vector<std::string> variables,
                                                   Field field,
                                                   TermOrder order = TermOrder::grevlex);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const Field& field() const { return field_; }
  TermOrder order() const { return order_; }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const RingSignature&, const RingSignature&) = default;

 private:
  std::vector<std::string> variables_;
  Field field_;
  TermOrder order_;
};

using SigPtr = std::shared_ptr<const RingSignature>;

bool same_signature(const SigPtr& a, const SigPtr& b);

class SignatureMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial variable(std::size_t index, std::uint32_t power = 1);
  static Monomial from_exponents(const std::vector<std::uint32_t>& exps);

  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::string to_string(const RingSignature& sig) const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = m.degree();
    for (std::size_t i = 0; i < kMaxVariables; ++i) h = h * 1000003u + m[i];
    return h;
  }
};

/// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
int compare(const Monomial& a, const Monomial& b, TermOrder order, std::size_t nvars);

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Polynomial with nonzero terms in strictly descending term order.
class Polynomial {
 public:
  explicit Polynomial(SigPtr sig) : sig_(std::move(sig)) {}
  Polynomial(SigPtr sig, std::vector<Term> terms);  // canonicalizes

  static Polynomial constant(SigPtr sig, const Scalar& c);
  static Polynomial constant(SigPtr sig, long long c);
  static Polynomial variable(SigPtr sig, std::size_t index);
  static Polynomial monomial(SigPtr sig, const Scalar& c, const Monomial& m);

  const SigPtr& signature() const { return sig_; }
  const Field& field() const { return sig_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  /// Largest total degree; -1 for zero.
  int total_degree() const;
  /// Smallest total degree among terms; -1 for zero.
  int low_degree() const;
  /// Coefficient of the constant term.
  Scalar constant_term() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Scalar& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t n) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Homogeneous component of the given degree.
  Polynomial homogeneous_part(std::uint32_t degree) const;

  std::string to_string() const;

 private:
  void check_sig(const Polynomial& other) const;
  SigPtr sig_;
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Polynomial parse_poly(const std::string& text, const SigPtr& sig);
/// Comma separated list; an all-blank string gives the empty list.
std::vector<Polynomial> parse_poly_list(const std::string& text, const SigPtr& sig);

// ---------------------------------------------------------------------------
// Free-module vectors, ordered position over term with lower component
// indices ranking higher.

struct VectorTerm {
  Scalar coeff;
  Monomial mono;
  std::uint32_t comp;
};

class FreeVector {
 public:
  FreeVector(SigPtr sig, std::size_t rank) : sig_(std::move(sig)), rank_(rank) {}
  /// Canonicalizes the given terms.
  FreeVector(SigPtr sig, std::size_t rank, std::vector<VectorTerm> terms);

  static FreeVector from_polynomials(SigPtr sig, const std::vector<Polynomial>& entries);
  static FreeVector unit(SigPtr sig, std::size_t rank, std::size_t comp);

  const SigPtr& signature() const { return sig_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VectorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VectorTerm& leading_term() const;
  /// Removes the leading term.
  void drop_leading();
  /// Largest total degree of a term; -1 for zero.
  int total_degree() const;

  /// Entry polynomials, one per component.
  std::vector<Polynomial> entries() const;
  Polynomial entry(std::size_t comp) const;

  FreeVector& operator+=(const FreeVector& other);
  FreeVector& operator-=(const FreeVector& other);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend bool operator==(const FreeVector& a, const FreeVector& b);

  FreeVector scaled(const Scalar& c) const;
  FreeVector times(const Polynomial& f) const;
  FreeVector times_monomial(const Scalar& c, const Monomial& m) const;
  /// this - c*m*other, merged in one pass.
  FreeVector minus_multiple(const Scalar& c, const Monomial& m, const FreeVector& other) const;
  FreeVector monic() const;
  /// Components restricted to [begin, end) and renumbered from zero.
  FreeVector slice(std::size_t begin, std::size_t end) const;
  /// Same entries inside a free module of larger rank, shifted by offset.
  FreeVector embedded(std::size_t rank, std::size_t offset) const;

  std::string to_string() const;

 private:
  SigPtr sig_;
  std::size_t rank_;
  std::vector<VectorTerm> terms_;
};

/// Position-over-term comparison of two vector terms' (monomial, component).
int compare_pot(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb,
                TermOrder order, std::size_t nvars);

}  // namespace dualhs
