#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualhs/finite_module.hpp"
#include "dualhs/ring.hpp"

namespace dualhs {

/// Free resolution segment F_0 <- F_1 <- ... ; maps[i] holds the ranks[i+1]
/// columns (in R^ranks[i]) of the differential F_{i+1} -> F_i.
struct Resolution {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<FreeVector>> maps;
};

class FPModule;
using ModulePtr = std::shared_ptr<const FPModule>;

/// M = coker(A) for A : R^q -> R^p, stored as p-component relation columns
/// reduced modulo J.
class FPModule {
 public:
  FPModule(RingPtr ring, std::size_t rank, std::vector<FreeVector> relations);

  static FPModule free(const RingPtr& ring, std::size_t rank);
  static FPModule zero(const RingPtr& ring);
  /// k = R/m.
  static FPModule residue_field(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const SigPtr& signature() const { return ring_->signature(); }
  /// Number of generators (rank of the cover).
  std::size_t rank() const { return rank_; }
  const std::vector<FreeVector>& relations() const { return relations_; }
  Polynomial entry(std::size_t row, std::size_t col) const { return relations_[col].entry(row); }

  /// Generator degrees making every relation column homogeneous, when they
  /// exist.
  std::optional<std::vector<int>> generator_degrees() const;
  /// The submodule generators this module was presented from (may be empty).
  const std::vector<FreeVector>& embedding() const { return embedding_; }

  /// Minimal presentation (memoized); the module itself when already minimal.
  const FPModule& minimal() const;
  /// mu(M).
  std::size_t minimal_generators() const { return minimal().rank(); }
  /// Minimal free resolution with at least `maps` differentials (memoized).
  Resolution resolution(std::size_t maps) const;

  std::string describe() const;

 private:
  friend FPModule submodule_presentation(const RingPtr&, const std::vector<FreeVector>&);
  struct State;
  RingPtr ring_;
  std::size_t rank_;
  std::vector<FreeVector> relations_;
  std::vector<FreeVector> embedding_;
  std::shared_ptr<State> state_;
};

/// The submodule of R^k generated by the given vectors, presented by their
/// syzygies over R.
FPModule submodule_presentation(const RingPtr& ring, const std::vector<FreeVector>& generators);

/// Removes unit entries and redundant relations. Requires a graded
/// presentation over a graded ring, or an Artinian local ring.
FPModule minimal_presentation(const FPModule& m);

/// Syz^1(M): the relation columns of the minimal presentation as a
/// submodule of R^mu, minimally presented. Zero for free M.
FPModule syzygy_module(const FPModule& m);

FPModule direct_sum(const FPModule& a, const FPModule& b);
/// M (x) S for a quotient S of the base ring in the same variables.
FPModule base_change(const FPModule& m, const RingPtr& target);
/// Hom_R(M, R), presented as a submodule of R^p via the kernel of A^T.
FPModule dual_module(const FPModule& m);

/// p*L - rank of the span of the columns acting on N^p: the length of
/// coker(A) (x) N.
std::size_t cokernel_length(const std::vector<FreeVector>& columns, std::size_t p,
                            const FiniteLengthModule& target);

/// M as an explicit finite-length module over an Artinian base ring.
FiniteLengthModule as_finite_length(const FPModule& m);

/// l(M / I^(n+1) M).
std::size_t module_truncation_length(const FPModule& m, const Ideal& ideal, int n);

/// Numerator K(t) of the graded Hilbert series of M (shifted so the lowest
/// generator degree is 0) over (1-t)^d, and the multiplicity e_0 relative to
/// d = dim R. Graded rings with graded presentations only.
struct GradedHilbert {
  std::vector<long long> numerator;
  long long multiplicity = 0;
};
GradedHilbert graded_hilbert(const FPModule& m);

/// Maximal Cohen-Macaulay test: l(M / theta M) = e_0(M) for linear systems
/// of parameters theta.
bool is_cohen_macaulay_module(const FPModule& m, std::uint64_t seed = 0);

}  // namespace dualhs
