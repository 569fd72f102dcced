#pragma once

#include <cstddef>
#include <vector>

#include "dualhs/field.hpp"
#include "dualhs/polynomial.hpp"

namespace dualhs {

/// Which divisor is used when several basis elements can reduce a term.
/// The remainder of a full reduction against a Groebner basis does not
/// depend on the choice; tests exercise that.
struct ReductionStrategy {
  enum class Kind { first, last, random };
  Kind kind = Kind::first;
  Rng* rng = nullptr;
};

/// Fully reduced remainder of f on division by the given vectors.
FreeVector reduce_vector(const FreeVector& f, const std::vector<FreeVector>& divisors,
                         ReductionStrategy strategy = {});

/// Reduced Groebner basis of a submodule of a free module P^rank (rank 1 is
/// the ideal case). Module order is position over term, lower positions
/// first.
class GroebnerBasis {
 public:
  GroebnerBasis(SigPtr sig, std::size_t rank) : sig_(std::move(sig)), rank_(rank) {}

  const SigPtr& signature() const { return sig_; }
  std::size_t rank() const { return rank_; }
  const std::vector<FreeVector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero() const { return elements_.empty(); }
  /// Ideal case: the basis is {1}.
  bool is_unit() const;

  FreeVector normal_form(const FreeVector& f, ReductionStrategy strategy = {}) const;
  Polynomial normal_form(const Polynomial& f, ReductionStrategy strategy = {}) const;
  bool contains(const FreeVector& f) const { return normal_form(f).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Ideal case: generators as polynomials.
  std::vector<Polynomial> polynomials() const;
  std::vector<Monomial> leading_monomials() const;

  /// Every S-vector reduces to zero (Buchberger's criterion).
  bool satisfies_buchberger_criterion() const;
  bool is_reduced() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.rank_ == b.rank_ && a.elements_ == b.elements_;
  }

 private:
  friend GroebnerBasis module_groebner(const std::vector<FreeVector>&, const SigPtr&,
                                       std::size_t);
  SigPtr sig_;
  std::size_t rank_;
  std::vector<FreeVector> elements_;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const SigPtr& sig);
GroebnerBasis module_groebner(const std::vector<FreeVector>& gens, const SigPtr& sig,
                              std::size_t rank);

/// S-vector of two vectors with leading terms in the same component.
FreeVector s_vector(const FreeVector& f, const FreeVector& g);

/// All n-fold products of the generators; n <= 0 gives the unit ideal.
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, int n,
                                    const SigPtr& sig);

/// Columns a_1..a_q of a p x q matrix over P/J together with generators of
/// their syzygy module { c in R^q : sum c_j a_j = 0 in R^p }.
struct SyzygyPresentation {
  std::vector<FreeVector> base;      // q columns of rank p
  std::vector<FreeVector> syzygies;  // columns of rank q, entries reduced mod J
};

/// Syzygies over R = P/J; J is given by its Groebner basis (empty for R = P).
SyzygyPresentation syzygy_matrix(const std::vector<FreeVector>& columns, std::size_t p,
                                 const GroebnerBasis& ideal);

/// Vectors reduced modulo J in every component.
FreeVector reduce_mod_ideal(const FreeVector& v, const GroebnerBasis& ideal);

/// Drops generators that lie in the submodule generated by the remaining
/// ones plus J*F. Over a local or graded ring the survivors are a minimal
/// generating set.
std::vector<FreeVector> prune_generators(std::vector<FreeVector> gens, std::size_t rank,
                                         const GroebnerBasis& ideal);

/// Membership of v in the submodule generated by gens plus J*F.
bool in_submodule(const FreeVector& v, const std::vector<FreeVector>& gens, std::size_t rank,
                  const GroebnerBasis& ideal);

/// Generators of the submodule J*F of P^rank.
std::vector<FreeVector> ideal_block(const GroebnerBasis& ideal, std::size_t rank);

}  // namespace dualhs
