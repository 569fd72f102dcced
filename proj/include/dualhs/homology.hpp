#pragma once

#include <cstddef>
#include <vector>

#include "dualhs/finite_module.hpp"
#include "dualhs/fpmodule.hpp"

namespace dualhs {

/// Hom_R(M, N) as a k-space: each basis element is the tuple (v_1..v_p) of
/// images of the generators of M, concatenated into one vector of N^p.
struct HomSpace {
  std::size_t dimension = 0;
  std::vector<Vector> basis;
};

HomSpace hom_space(const FPModule& m, const FiniteLengthModule& n,
                   ActionRoute route = ActionRoute::normal_form);

/// l(Hom_R(M, N)) = p*l(N) - rank of (v_r) -> (sum_r a_rj v_r)_j.
std::size_t hom_length(const FPModule& m, const FiniteLengthModule& n,
                       ActionRoute route = ActionRoute::normal_form);

/// l(Ext^i_R(M, N)) from the minimal free resolution of M.
std::size_t ext_length(std::size_t i, const FPModule& m, const FiniteLengthModule& n,
                       ActionRoute route = ActionRoute::normal_form);

/// l(Hom_R(M, R/I^(n+1))) for a Gorenstein ring R (omega = R); zero for n < 0.
std::size_t dual_hs_value(const FPModule& m, const Ideal& ideal, int n,
                          ActionRoute route = ActionRoute::normal_form);

/// l(Ext^i_R(M, R/I^(n+1))).
std::size_t ext_dual_value(std::size_t i, const FPModule& m, const Ideal& ideal, int n,
                           ActionRoute route = ActionRoute::normal_form);

/// Whether Ext^i(M, phi) : Ext^i(M, N) -> Ext^i(M, N') is injective for an
/// R-linear map phi given by its columns phi(e_k) in N'.
bool ext_map_injective(std::size_t i, const FPModule& m, const FiniteLengthModule& source,
                       const FiniteLengthModule& target, const std::vector<SparseVec>& phi);

/// Multiplication by x as a map R/I^n -> R/I^(n+1).
std::vector<SparseVec> multiplication_map(const Ideal& ideal, int n, const Polynomial& x);

/// The image of n^i inside S as a finite-length module, S local Artinian.
FiniteLengthModule maximal_power(const RingPtr& ring, int i);

/// mu_1(n^i) = dim_k Ext^1_S(k, n^i) for a local Artinian ring S.
std::size_t bass_mu1(const RingPtr& ring, int i);

}  // namespace dualhs
