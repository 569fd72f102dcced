#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualhs/errors.hpp"
#include "dualhs/groebner.hpp"
#include "dualhs/linalg.hpp"

namespace dualhs {

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^nvars of P/(gens) for a
/// monomial ideal.
std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Largest set of variables none of whose monomials is divisible by a given
/// monomial; its size is the Krull dimension of P/(leads).
std::vector<std::size_t> independent_variables(const std::vector<Monomial>& leads,
                                               std::size_t nvars);

/// Standard monomials of a zero-dimensional initial ideal, ordered by degree
/// and then ascending term order. Throws if the quotient is not finite.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars,
                                         TermOrder order);

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// R = P/J with J kept as a reduced Groebner basis. Only graded quotients and
/// local Artinian quotients are fully supported; other rings can be built
/// but most module operations reject them.
class QuotientRing {
 public:
  enum class Regime { graded, artinian, unsupported };

  static RingPtr make(const SigPtr& sig, const std::vector<Polynomial>& gens);

  const SigPtr& signature() const { return sig_; }
  const Field& field() const { return sig_->field(); }
  std::size_t nvars() const { return sig_->nvars(); }
  const GroebnerBasis& ideal() const { return gb_; }
  const std::vector<Polynomial>& defining_generators() const { return gens_; }

  int dimension() const { return dimension_; }
  bool graded() const { return graded_; }
  /// Zero-dimensional with every variable nilpotent: a local Artinian ring.
  bool artinian() const { return artinian_; }
  Regime regime() const;
  bool cohen_macaulay() const { return cohen_macaulay_; }
  bool gorenstein() const { return gorenstein_; }
  /// Multiplicity e_0 of R at the homogeneous maximal ideal (graded rings);
  /// the length for Artinian rings; 0 when unsupported.
  long long multiplicity() const { return multiplicity_; }
  /// Numerator h(t) of the Hilbert series h(t)/(1-t)^d (graded rings).
  const std::vector<long long>& hilbert_numerator() const { return h_numerator_; }

  Polynomial reduce(const Polynomial& f) const { return gb_.normal_form(f); }
  FreeVector reduce(const FreeVector& v) const { return reduce_mod_ideal(v, gb_); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(sig_, i); }
  Polynomial parse(const std::string& text) const { return reduce(parse_poly(text, sig_)); }
  Polynomial one() const { return Polynomial::constant(sig_, 1); }

  /// R/(extra).
  RingPtr quotient(const std::vector<Polynomial>& extra) const;

  /// Throws HypothesisError unless the ring is graded or local Artinian.
  void require_supported(const std::string& what) const;

  std::string describe() const;

 private:
  QuotientRing(SigPtr sig, std::vector<Polynomial> gens);
  void classify();

  SigPtr sig_;
  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
  int dimension_ = 0;
  bool graded_ = false;
  bool artinian_ = false;
  bool cohen_macaulay_ = false;
  bool gorenstein_ = false;
  long long multiplicity_ = 0;
  std::vector<long long> h_numerator_;
};

/// Socle dimension and length of the finite-dimensional algebra P/G.
struct ArtinianShape {
  std::size_t length = 0;
  std::size_t socle_dimension = 0;
};
ArtinianShape artinian_shape(const GroebnerBasis& gb);

/// Every variable is nilpotent modulo a zero-dimensional basis.
bool variables_nilpotent(const GroebnerBasis& gb);

/// The finite-dimensional local algebra P/G for a zero-dimensional Groebner
/// basis G, with the standard monomials as k-basis.
class ArtinianAlgebra {
 public:
  explicit ArtinianAlgebra(GroebnerBasis gb);

  const SigPtr& signature() const { return gb_.signature(); }
  const Field& field() const { return gb_.signature()->field(); }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of the normal form of f.
  SparseVec coordinates(const Polynomial& f) const;
  /// Coordinates of the normal form of a monomial (memoized).
  SparseVec monomial_coordinates(const Monomial& m) const;
  /// f * b_k, computed from memoized monomial normal forms.
  SparseVec multiply(const Polynomial& f, std::size_t k) const;
  /// table[i][k] = x_i * b_k.
  const std::vector<std::vector<SparseVec>>& multiplication_table() const { return table_; }
  Polynomial element(const SparseVec& coords) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::vector<std::vector<SparseVec>> table_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Monomial, SparseVec, MonomialHash> nf_cache_;
};

using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

/// A minimal reduction J of I with reduction number r (J * I^r = I^(r+1)).
struct ReductionData {
  std::vector<Polynomial> generators;
  int r = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// An ideal of a QuotientRing with lazily cached bases of J + I^n.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Reduced Groebner basis of J + I^n in P; the unit ideal for n <= 0.
  const GroebnerBasis& power_basis(int n) const;
  /// Generators of I^n as ring elements (n <= 0 gives (1)).
  std::vector<Polynomial> power_generators(int n) const;
  /// Length of R/I^n.
  std::size_t colength(int n) const;
  /// R/I^n as an algebra (cached); null for n <= 0, where R/I^n = 0.
  AlgebraPtr truncation(int n) const;

  bool is_mprimary() const;
  void require_mprimary() const;
  /// Generated by the variables (the homogeneous maximal ideal).
  bool is_maximal_ideal() const;

  std::string describe() const;

  /// Memo slot for minimal reductions, keyed by seed.
  std::shared_ptr<const ReductionData> cached_reduction(std::uint64_t seed) const;
  void cache_reduction(std::uint64_t seed, std::shared_ptr<const ReductionData> data) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::map<std::uint64_t, std::shared_ptr<const ReductionData>> reductions_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<GroebnerBasis>> powers_;
  mutable std::map<int, AlgebraPtr> truncations_;
  mutable int mprimary_ = -1;
};

using IdealPtr = std::shared_ptr<const Ideal>;

IdealPtr make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);
IdealPtr maximal_ideal(const RingPtr& ring);
bool is_mprimary(const RingPtr& ring, const std::vector<Polynomial>& gens);

}  // namespace dualhs
