#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualhs/fpmodule.hpp"
#include "dualhs/homology.hpp"
#include "dualhs/numerical.hpp"

namespace dualhs {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  /// Fit window; 0 means degree bound + 2.
  std::size_t window = 0;
  /// Largest table index tried by fits; negative means 4d + 2r + 16.
  int nmax = -1;
  /// Window W for superficial-element checks.
  int superficial_window = 6;
  /// Values n = 0..upto sampled by termwise identities.
  int upto = 10;
  ActionRoute route = ActionRoute::normal_form;
};

/// One exact comparison inside a report.
struct Check {
  std::string name;
  Json lhs;
  Json rhs;
  bool ok = false;
};

void require_gorenstein(const QuotientRing& ring);
void require_mcm(const FPModule& m);
/// G_I(R) Cohen-Macaulay: I = m over a graded ring (G_m(R) = R), or any ideal
/// of an Artinian ring.
void require_associated_graded_cm(const Ideal& ideal);

/// d random combinations of the generators; r is the least n with
/// J * I^n = I^(n+1), tested locally as J * I^n + I^(n+2) = I^(n+1).
/// For d = 0, J = (0) and r = max { n : I^n != 0 }. Memoized on the ideal.
ReductionData minimal_reduction(const Ideal& ideal, std::uint64_t seed = 0);

FitOptions fit_options(const Ideal& ideal, int d_max, const Options& options);

/// n -> l(M / I^(n+1) M).
NumericalFunction hs_function(const FPModule& m, const Ideal& ideal, const Options& options = {});
/// n -> l(Hom(M, R/I^(n+1))).
NumericalFunction dual_hs_function(const FPModule& m, const Ideal& ideal,
                                   const Options& options = {});
/// n -> l(Ext^1(M, R/I^(n+1))).
NumericalFunction ext1_dual_function(const FPModule& m, const Ideal& ideal,
                                     const Options& options = {});

/// A fitted function, its series numerator over (1-t)^(d+1), and the
/// coefficients f^(i)(1)/i! for i = 0..max(d, 1).
struct Coefficients {
  NumericalFunction fit;
  SeriesNumerator series;
  std::vector<long long> values;
};
Coefficients hilbert_coefficients(const FPModule& m, const Ideal& ideal,
                                  const Options& options = {});
/// Requires R Gorenstein and M maximal Cohen-Macaulay.
Coefficients dual_hilbert_coefficients(const FPModule& m, const Ideal& ideal,
                                       const Options& options = {});

/// sum_{j=0}^{d} sum_{n=j}^{r-1} binom(d, j) l(Ext^j(M, R/I^(n+1-j))).
long long phi(const FPModule& m, const Ideal& ideal, int r,
              ActionRoute route = ActionRoute::normal_form);

/// l(Hom(M, I^n / I^(n+1))).
std::size_t dual_hilbert_function_delta(const FPModule& m, const Ideal& ideal, int n);

struct UlrichReport {
  bool ulrich = false;
  long long e0 = 0;
  std::size_t mu = 0;
  /// l(M / JM) for a minimal reduction J of m.
  std::size_t reduction_colength = 0;
  bool routes_agree = false;
};
UlrichReport ulrich_check(const FPModule& m, const Options& options = {});

struct ZeroDimReport {
  int r = 0;
  long long e0 = 0;
  std::vector<long long> alpha;
  long long c1 = 0;
  /// (1-t) sum alpha_n t^n + e0 t^r.
  SeriesNumerator f;
  /// c_1 read off the fitted dual series.
  long long c1_series = 0;
  bool consistent = false;
};
ZeroDimReport zero_dim_report(const FPModule& n, const Ideal& ideal, const Options& options = {});

struct SuperficialRequest {
  /// Modules X with (I^(n+1) X : x) cap I^c X = I^n X checked on a window.
  std::vector<FPModule> protect;
  /// Module whose Ext^1 and Ext^2 maps under x must be injective.
  const FPModule* ext_module = nullptr;
  /// Demand c = 0 and injectivity from n = 1 on (x* regular).
  bool regular = false;
};

struct SuperficialElement {
  Polynomial x;
  /// Largest detected c over the protected modules.
  int c = 0;
  /// First n of the verified injectivity window.
  int ext_start = 1;
  int attempts = 0;
  std::vector<Check> checks;
};
SuperficialElement superficial_element(const Ideal& ideal, const SuperficialRequest& request,
                                       const Options& options = {});

/// S = R/(x), J = I S and N = M/xM.
struct Specialization {
  RingPtr ring;
  IdealPtr ideal;
  FPModule module;
};
Specialization specialize(const Ideal& ideal, const FPModule& m, const Polynomial& x);

}  // namespace dualhs
