#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dualhs/linalg.hpp"
#include "dualhs/ring.hpp"

namespace dualhs {

/// How ring elements act on a finite-length module.
enum class ActionRoute {
  /// Algebras: normal forms of monomial products (memoized). Other modules
  /// fall back to the operator route.
  normal_form,
  /// Sparse composition of the per-variable multiplication operators.
  operators,
  /// Dense matrix polynomial evaluation on the multiplication table.
  dense_table,
};

/// A finite-dimensional k-vector space with one commuting multiplication
/// operator per ring variable: a module of finite length over P (and over any
/// quotient that annihilates it).
class FiniteLengthModule {
 public:
  static FiniteLengthModule zero(const SigPtr& sig);
  static FiniteLengthModule from_algebra(AlgebraPtr algebra);
  /// Explicit operators (one dim x dim matrix per variable, acting on
  /// column vectors).
  static FiniteLengthModule from_operators(const SigPtr& sig, const std::vector<Matrix>& ops,
                                           std::vector<std::string> labels = {});

  const SigPtr& signature() const { return sig_; }
  const Field& field() const { return sig_->field(); }
  std::size_t length() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Present when the module is an algebra P/G with its monomial basis.
  const AlgebraPtr& algebra() const { return algebra_; }

  /// columns[k] = x_i * e_k.
  const std::vector<SparseVec>& operator_columns(std::size_t i) const { return (*ops_)[i]; }
  Matrix dense_operator(std::size_t i) const;

  /// Matrix of multiplication by f, as columns f * e_k.
  std::vector<SparseVec> action(const Polynomial& f,
                                ActionRoute route = ActionRoute::normal_form) const;
  SparseVec act(const Polynomial& f, const SparseVec& v) const;

  /// The stable subspace spanned by the given vectors, as a module.
  FiniteLengthModule submodule(const std::vector<Vector>& span) const;
  /// The quotient by a stable subspace.
  FiniteLengthModule quotient(const std::vector<Vector>& span) const;
  static FiniteLengthModule direct_sum(const FiniteLengthModule& a, const FiniteLengthModule& b);

  bool operators_commute() const;
  bool operators_nilpotent() const;
  std::size_t socle_dimension() const;

 private:
  struct Cache;
  FiniteLengthModule(SigPtr sig, std::size_t dim);
  const std::vector<SparseVec>& monomial_action(const Monomial& m) const;

  SigPtr sig_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<std::vector<SparseVec>>> ops_;
  std::vector<std::string> labels_;
  AlgebraPtr algebra_;
  std::shared_ptr<Cache> cache_;
};

/// R/I^n as a module; the zero module for n <= 0.
FiniteLengthModule truncation_algebra(const Ideal& ideal, int n);

/// A local Artinian ring as a module over itself.
FiniteLengthModule artinian_ring_module(const QuotientRing& ring);

/// I^n/I^{n+1}, built as the image of J + I^n inside R/I^{n+1}; n = 0 gives
/// R/I.
FiniteLengthModule graded_piece(const Ideal& ideal, int n);

/// Coker(A) (x) S for an algebra S: columns of rank p over the ambient ring
/// act on S^p and the cokernel of their span is returned.
FiniteLengthModule cokernel_over_algebra(const std::vector<FreeVector>& columns, std::size_t p,
                                         const FiniteLengthModule& algebra);

}  // namespace dualhs
