#include "dualhs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace dualhs {

std::string to_string(TermOrder order) {
  switch (order) {
    case TermOrder::grevlex: return "grevlex";
    case TermOrder::lex: return "lex";
    case TermOrder::glex: return "glex";
  }
  return "?";
}

TermOrder parse_term_order(const std::string& text) {
  if (text == "grevlex") return TermOrder::grevlex;
  if (text == "lex") return TermOrder::lex;
  if (text == "glex" || text == "graded-lex" || text == "deglex") return TermOrder::glex;
  throw std::invalid_argument("unknown term order '" + text + "'");
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSignature::RingSignature(std::vector<std::string> variables, Field field, TermOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  if (variables_.size() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) throw std::invalid_argument("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
}

SigPtr RingSignature::make(std::vector<std::string> variables, Field field, TermOrder order) {
  return std::make_shared<const RingSignature>(std::move(variables), field, order);
}

int RingSignature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

bool same_signature(const SigPtr& a, const SigPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Monomial

namespace {

std::uint16_t checked_exponent(std::uint32_t e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw std::overflow_error("exponent too large");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index");
  Monomial m;
  m.exps_[index] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<std::uint32_t>& exps) {
  if (exps.size() > kMaxVariables) throw std::out_of_range("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    m.exps_[i] = checked_exponent(exps[i]);
    m.degree_ += exps[i];
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  m.degree_ = degree_ - other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  m.degree_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    m.exps_[i] = checked_exponent(std::uint32_t{a.exps_[i]} + b.exps_[i]);
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::string Monomial::to_string(const RingSignature& sig) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < sig.nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += sig.variables()[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

int compare(const Monomial& a, const Monomial& b, TermOrder order, std::size_t nvars) {
  if (order != TermOrder::lex && a.degree() != b.degree())
    return a.degree() < b.degree() ? -1 : 1;
  if (order == TermOrder::grevlex) {
    for (std::size_t i = nvars; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < nvars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int compare_pot(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb,
                TermOrder order, std::size_t nvars) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return compare(a, b, order, nvars);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

template <class T, class Cmp>
std::vector<T> canonical_terms(std::vector<T> terms, Cmp cmp, bool (*same)(const T&, const T&)) {
  std::sort(terms.begin(), terms.end(), [&](const T& a, const T& b) { return cmp(a, b) > 0; });
  std::vector<T> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && same(out.back(), t)) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool same_mono(const Term& a, const Term& b) { return a.mono == b.mono; }
bool same_vterm(const VectorTerm& a, const VectorTerm& b) {
  return a.comp == b.comp && a.mono == b.mono;
}

}  // namespace

Polynomial::Polynomial(SigPtr sig, std::vector<Term> terms) : sig_(std::move(sig)) {
  const TermOrder order = sig_->order();
  const std::size_t n = sig_->nvars();
  for (const auto& t : terms)
    if (t.coeff.modulus() != sig_->field().characteristic())
      throw FieldMismatch("coefficient outside the ring's field");
  terms_ = canonical_terms<Term>(
      std::move(terms),
      [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order, n); },
      same_mono);
}

Polynomial Polynomial::constant(SigPtr sig, const Scalar& c) {
  return monomial(std::move(sig), c, Monomial());
}

Polynomial Polynomial::constant(SigPtr sig, long long c) {
  const Field f = sig->field();
  return monomial(std::move(sig), Scalar::from_int(f, c), Monomial());
}

Polynomial Polynomial::variable(SigPtr sig, std::size_t index) {
  if (index >= sig->nvars()) throw std::out_of_range("variable index");
  const Field f = sig->field();
  return monomial(std::move(sig), Scalar::one(f), Monomial::variable(index));
}

Polynomial Polynomial::monomial(SigPtr sig, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(sig));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar::zero(field());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_sig(const Polynomial& other) const {
  if (!same_signature(sig_, other.sig_))
    throw SignatureMismatch("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two descending term lists: a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract, TermOrder order, std::size_t n) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare(a[i].mono, b[j].mono, order, n);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_sig(other);
  terms_ = merge_terms(terms_, other.terms_, false, sig_->order(), sig_->nvars());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_sig(other);
  terms_ = merge_terms(terms_, other.terms_, true, sig_->order(), sig_->nvars());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_sig(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial(a.sig_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_signature(a.sig_, b.sig_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(sig_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(sig_);
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return p;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result = constant(sig_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::homogeneous_part(std::uint32_t degree) const {
  Polynomial p(sig_);
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) p.terms_.push_back(t);
  return p;
}

namespace {

std::string term_body(const Scalar& magnitude, const Monomial& m, const RingSignature& sig) {
  if (m.is_one()) return magnitude.to_string();
  if (magnitude.is_one()) return m.to_string(sig);
  return magnitude.to_string() + "*" + m.to_string(sig);
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const bool negative = terms_[i].coeff.prints_negative();
    const Scalar magnitude = negative ? -terms_[i].coeff : terms_[i].coeff;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(magnitude, terms_[i].mono, *sig_);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser: expr := ['+'|'-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := base ('^' nat)? ; base := rational | ident | '(' expr ')'

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const SigPtr& sig) : text_(text), sig_(sig) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  // For lists: parses one expression and leaves the cursor on the delimiter.
  Polynomial parse_one() { return expr(); }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected exponent");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits = text_.substr(start, pos_ - start);
      if (digits.size() > 5 || std::stoul(digits) > std::numeric_limits<std::uint16_t>::max()) {
        pos_ = start;
        fail("exponent too large");
      }
      try {
        b = b.pow(static_cast<std::uint32_t>(std::stoul(digits)));
      } catch (const std::overflow_error&) {
        pos_ = start;
        fail("exponent too large");
      }
    }
    return b;
  }

  Polynomial base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      const int index = sig_->index_of(name);
      if (index < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(sig_, static_cast<std::size_t>(index));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial number() {
    const std::size_t start = pos_;
    mpq_class value(mpz_class(digits()), 1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected denominator");
      mpz_class den(digits());
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      value = mpq_class(value.get_num(), den);
      value.canonicalize();
    }
    try {
      return Polynomial::constant(sig_, Scalar::from_rational(sig_->field(), value));
    } catch (const std::domain_error&) {
      pos_ = start;
      fail("denominator vanishes in " + sig_->field().name());
    }
  }

  const std::string& text_;
  SigPtr sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const SigPtr& sig) {
  return PolyParser(text, sig).parse_all();
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const SigPtr& sig) {
  PolyParser parser(text, sig);
  std::vector<Polynomial> out;
  if (parser.at_end()) return out;
  for (;;) {
    out.push_back(parser.parse_one());
    if (parser.at_end()) break;
    if (!parser.consume(',')) parser.fail("expected ','");
  }
  return out;
}

// ---------------------------------------------------------------------------
// FreeVector

FreeVector::FreeVector(SigPtr sig, std::size_t rank, std::vector<VectorTerm> terms)
    : sig_(std::move(sig)), rank_(rank) {
  const TermOrder order = sig_->order();
  const std::size_t n = sig_->nvars();
  for (const auto& t : terms)
    if (t.comp >= rank_) throw std::out_of_range("vector component outside rank");
  terms_ = canonical_terms<VectorTerm>(
      std::move(terms),
      [&](const VectorTerm& a, const VectorTerm& b) {
        return compare_pot(a.mono, a.comp, b.mono, b.comp, order, n);
      },
      same_vterm);
}

FreeVector FreeVector::from_polynomials(SigPtr sig, const std::vector<Polynomial>& entries) {
  FreeVector v(sig, entries.size());
  // Entries are already sorted; concatenating in component order keeps POT.
  for (std::size_t c = 0; c < entries.size(); ++c) {
    if (!same_signature(entries[c].signature(), sig))
      throw SignatureMismatch("vector entry from a different ring");
    for (const auto& t : entries[c].terms())
      v.terms_.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(c)});
  }
  return v;
}

FreeVector FreeVector::unit(SigPtr sig, std::size_t rank, std::size_t comp) {
  const Field f = sig->field();
  FreeVector v(std::move(sig), rank);
  v.terms_.push_back({Scalar::one(f), Monomial(), static_cast<std::uint32_t>(comp)});
  return v;
}

const VectorTerm& FreeVector::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero vector");
  return terms_.front();
}

void FreeVector::drop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

int FreeVector::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

std::vector<Polynomial> FreeVector::entries() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.comp].push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.emplace_back(sig_, std::move(p));
  return out;
}

Polynomial FreeVector::entry(std::size_t comp) const {
  std::vector<Term> part;
  for (const auto& t : terms_)
    if (t.comp == comp) part.push_back({t.coeff, t.mono});
  return Polynomial(sig_, std::move(part));
}

namespace {

std::vector<VectorTerm> merge_vterms(const std::vector<VectorTerm>& a,
                                     const std::vector<VectorTerm>& b, const Scalar* factor,
                                     const Monomial* shift, bool subtract, TermOrder order,
                                     std::size_t n) {
  std::vector<VectorTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto scaled_b = [&](std::size_t k) {
    VectorTerm t = b[k];
    if (factor) t.coeff *= *factor;
    if (shift) t.mono = t.mono * *shift;
    if (subtract) t.coeff = -t.coeff;
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    VectorTerm tb = scaled_b(j);
    int c = i == a.size() ? -1 : compare_pot(a[i].mono, a[i].comp, tb.mono, tb.comp, order, n);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      if (!tb.coeff.is_zero()) out.push_back(std::move(tb));
      ++j;
    } else {
      Scalar s = a[i].coeff + tb.coeff;
      if (!s.is_zero()) out.push_back({std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FreeVector& FreeVector::operator+=(const FreeVector& other) {
  if (rank_ != other.rank_) throw std::invalid_argument("vector rank mismatch");
  terms_ = merge_vterms(terms_, other.terms_, nullptr, nullptr, false, sig_->order(),
                        sig_->nvars());
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& other) {
  if (rank_ != other.rank_) throw std::invalid_argument("vector rank mismatch");
  terms_ = merge_vterms(terms_, other.terms_, nullptr, nullptr, true, sig_->order(),
                        sig_->nvars());
  return *this;
}

FreeVector FreeVector::minus_multiple(const Scalar& c, const Monomial& m,
                                      const FreeVector& other) const {
  FreeVector out(sig_, rank_);
  out.terms_ = merge_vterms(terms_, other.terms_, &c, &m, true, sig_->order(), sig_->nvars());
  return out;
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

FreeVector FreeVector::scaled(const Scalar& c) const {
  if (c.is_zero()) return FreeVector(sig_, rank_);
  FreeVector v = *this;
  for (auto& t : v.terms_) t.coeff *= c;
  return v;
}

FreeVector FreeVector::times_monomial(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return FreeVector(sig_, rank_);
  FreeVector v = *this;
  for (auto& t : v.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return v;
}

FreeVector FreeVector::times(const Polynomial& f) const {
  std::vector<VectorTerm> products;
  products.reserve(terms_.size() * f.size());
  for (const auto& s : f.terms())
    for (const auto& t : terms_) products.push_back({s.coeff * t.coeff, s.mono * t.mono, t.comp});
  return FreeVector(sig_, rank_, std::move(products));
}

FreeVector FreeVector::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

FreeVector FreeVector::slice(std::size_t begin, std::size_t end) const {
  FreeVector v(sig_, end - begin);
  for (const auto& t : terms_)
    if (t.comp >= begin && t.comp < end)
      v.terms_.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(t.comp - begin)});
  return v;
}

FreeVector FreeVector::embedded(std::size_t rank, std::size_t offset) const {
  if (offset + rank_ > rank) throw std::out_of_range("embedding exceeds rank");
  FreeVector v(sig_, rank);
  v.terms_ = terms_;
  for (auto& t : v.terms_) t.comp += static_cast<std::uint32_t>(offset);
  return v;
}

std::string FreeVector::to_string() const {
  std::string out = "[";
  const auto parts = entries();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i].to_string();
  }
  return out + "]";
}

}  // namespace dualhs
