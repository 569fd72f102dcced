#include "dualhs/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualhs {

namespace {

constexpr std::uint64_t kReductionSalt = 0x3c6ef372fe94f82bULL;
constexpr std::uint64_t kSuperficialSalt = 0xa54ff53a5f1d36f1ULL;
constexpr int kReductionAttempts = 8;
constexpr int kSuperficialAttempts = 16;

Polynomial random_combination(const std::vector<Polynomial>& gens, const RingPtr& ring, Rng& rng) {
  Polynomial out(ring->signature());
  for (const auto& g : gens) out += g.scaled(Scalar::random_nonzero(ring->field(), rng));
  return ring->reduce(out);
}

// J * I^n + I^(n+2) = I^(n+1): by Nakayama this is J I^n = I^(n+1) locally.
bool reduces_at(const Ideal& ideal, const std::vector<Polynomial>& j, int n) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> gens = ring->ideal().polynomials();
  for (const auto& g : ideal.power_basis(n).polynomials())
    for (const auto& a : j) gens.push_back(a * g);
  for (const auto& g : ideal.power_basis(n + 2).polynomials()) gens.push_back(g);
  return buchberger(gens, ring->signature()) == ideal.power_basis(n + 1);
}

// X / I^(n+1) X together with the images of I^j X inside it.
struct Layer {
  FiniteLengthModule space;
  const Ideal* ideal;

  std::vector<Vector> power_image(int j) const {
    std::vector<Vector> out;
    const std::size_t L = space.length();
    if (j <= 0) {
      for (std::size_t k = 0; k < L; ++k) {
        Vector e = zero_vector(space.field(), L);
        e[k] = Scalar::one(space.field());
        out.push_back(std::move(e));
      }
      return out;
    }
    for (const auto& g : ideal->power_basis(j).polynomials())
      for (const auto& col : space.action(g)) out.push_back(to_dense(space.field(), col, L));
    return out;
  }
};

Layer layer(const FPModule& x, const Ideal& ideal, int n) {
  return {cokernel_over_algebra(x.relations(), x.rank(), truncation_algebra(ideal, n + 1)), &ideal};
}

// (I^(n+1) X : x) cap I^c X = I^n X, compared as dimensions inside X/I^(n+1)X.
bool colon_condition(const Layer& v, const Polynomial& x, int c, int n) {
  const std::size_t L = v.space.length();
  if (L == 0) return true;
  const EchelonBasis sub(v.space.field(), L, v.power_image(c));
  const auto xcols = v.space.action(x);
  std::vector<Vector> images;
  for (const auto& b : sub.basis())
    images.push_back(to_dense(v.space.field(), sparse_apply(xcols, to_sparse(b)), L));
  const std::size_t kernel = sub.dimension() - span_rank(v.space.field(), L, images);
  return kernel == span_rank(v.space.field(), L, v.power_image(n));
}

}  // namespace

void require_gorenstein(const QuotientRing& ring) {
  if (!ring.gorenstein()) throw HypothesisError("Gorenstein ring", ring.describe());
}

void require_mcm(const FPModule& m) {
  if (!is_cohen_macaulay_module(m))
    throw HypothesisError("maximal Cohen-Macaulay module", m.describe());
}

void require_associated_graded_cm(const Ideal& ideal) {
  const QuotientRing& ring = *ideal.ring();
  if (ring.artinian()) return;
  if (!ring.graded() || !ideal.is_maximal_ideal() || !ring.cohen_macaulay())
    throw HypothesisError("G_I(R) Cohen-Macaulay",
                          "only checked for I = m over a Cohen-Macaulay graded ring");
}

ReductionData minimal_reduction(const Ideal& ideal, std::uint64_t seed) {
  if (auto cached = ideal.cached_reduction(seed)) return *cached;
  ideal.require_mprimary();
  const RingPtr& ring = ideal.ring();
  ring->require_supported("minimal reduction");
  const int d = ring->dimension();
  ReductionData out;
  out.seed = seed;
  if (d == 0) {
    int r = 0;
    while (!(ideal.power_basis(r + 1) == ring->ideal())) ++r;
    out.r = r;
    out.attempts = 1;
  } else {
    Rng rng(seed ^ kReductionSalt);
    const int cap = 4 * d + 16;
    bool found = false;
    for (int attempt = 1; attempt <= kReductionAttempts && !found; ++attempt) {
      std::vector<Polynomial> j;
      for (int i = 0; i < d; ++i) j.push_back(random_combination(ideal.generators(), ring, rng));
      for (int n = 0; n <= cap; ++n) {
        if (reduces_at(ideal, j, n)) {
          out.generators = j;
          out.r = n;
          out.attempts = attempt;
          found = true;
          break;
        }
      }
    }
    if (!found) throw BudgetExhausted("reduction not found for " + ideal.describe());
  }
  ideal.cache_reduction(seed, std::make_shared<const ReductionData>(out));
  return out;
}

FitOptions fit_options(const Ideal& ideal, int d_max, const Options& options) {
  const int d = ideal.ring()->dimension();
  const int r = minimal_reduction(ideal, options.seed).r;
  FitOptions out;
  out.window = options.window;
  const int w = static_cast<int>(std::max<std::size_t>(options.window, std::max(d_max, 0) + 2));
  out.cap = options.nmax >= 0 ? options.nmax : 4 * d + 2 * r + 16;
  out.start = std::min(out.cap, d + r + w + 2);
  return out;
}

NumericalFunction hs_function(const FPModule& m, const Ideal& ideal, const Options& options) {
  const int d = ideal.ring()->dimension();
  return fit_function([&](int n) { return static_cast<long long>(module_truncation_length(m, ideal, n)); },
                      d, fit_options(ideal, d, options));
}

NumericalFunction dual_hs_function(const FPModule& m, const Ideal& ideal, const Options& options) {
  const int d = ideal.ring()->dimension();
  return fit_function(
      [&](int n) { return static_cast<long long>(dual_hs_value(m, ideal, n, options.route)); }, d,
      fit_options(ideal, d, options));
}

NumericalFunction ext1_dual_function(const FPModule& m, const Ideal& ideal, const Options& options) {
  const int d_max = std::max(ideal.ring()->dimension() - 1, 0);
  return fit_function(
      [&](int n) { return static_cast<long long>(ext_dual_value(1, m, ideal, n, options.route)); },
      d_max, fit_options(ideal, d_max, options));
}

namespace {

Coefficients coefficients_of(NumericalFunction fit, int d) {
  Coefficients out{std::move(fit), {}, {}};
  out.series = series_numerator(out.fit, d + 1);
  for (int i = 0; i <= std::max(d, 1); ++i) out.values.push_back(out.series.coefficient(i));
  // The numerator route and the binomial-basis fit must agree.
  const auto basis = out.fit.coefficients_in_degree(d);
  for (int i = 0; i <= d; ++i)
    if (basis[i] != out.values[i]) throw std::logic_error("coefficient routes disagree");
  return out;
}

}  // namespace

Coefficients hilbert_coefficients(const FPModule& m, const Ideal& ideal, const Options& options) {
  return coefficients_of(hs_function(m, ideal, options), ideal.ring()->dimension());
}

Coefficients dual_hilbert_coefficients(const FPModule& m, const Ideal& ideal,
                                       const Options& options) {
  require_gorenstein(*ideal.ring());
  require_mcm(m);
  return coefficients_of(dual_hs_function(m, ideal, options), ideal.ring()->dimension());
}

long long phi(const FPModule& m, const Ideal& ideal, int r, ActionRoute route) {
  require_gorenstein(*ideal.ring());
  const int d = ideal.ring()->dimension();
  long long total = 0;
  for (int j = 0; j <= d; ++j)
    for (int n = j; n <= r - 1; ++n)
      total += binomial(d, j) *
               static_cast<long long>(ext_length(j, m, truncation_algebra(ideal, n + 1 - j), route));
  return total;
}

std::size_t dual_hilbert_function_delta(const FPModule& m, const Ideal& ideal, int n) {
  require_gorenstein(*ideal.ring());
  return hom_length(m, graded_piece(ideal, n));
}

UlrichReport ulrich_check(const FPModule& m, const Options& options) {
  require_mcm(m);
  const RingPtr& ring = m.ring();
  const auto max = maximal_ideal(ring);
  UlrichReport out;
  out.mu = m.minimal_generators();
  out.e0 = hilbert_coefficients(m, *max, options).values[0];
  const ReductionData j = minimal_reduction(*max, options.seed);
  const RingPtr quotient = j.generators.empty() ? ring : ring->quotient(j.generators);
  out.reduction_colength = cokernel_length(m.relations(), m.rank(), artinian_ring_module(*quotient));
  out.ulrich = out.e0 == static_cast<long long>(out.mu);
  out.routes_agree = out.ulrich == (out.reduction_colength == out.mu);
  return out;
}

ZeroDimReport zero_dim_report(const FPModule& n, const Ideal& ideal, const Options& options) {
  const QuotientRing& s = *ideal.ring();
  if (!s.artinian()) throw HypothesisError("Artinian ring", s.describe());
  require_gorenstein(s);
  ZeroDimReport out;
  out.r = minimal_reduction(ideal, options.seed).r;
  out.e0 = static_cast<long long>(as_finite_length(n).length());
  long long sum = 0;
  for (int k = 0; k < out.r; ++k) {
    out.alpha.push_back(static_cast<long long>(hom_length(n, truncation_algebra(ideal, k + 1), options.route)));
    sum += out.alpha.back();
  }
  out.c1 = out.r * out.e0 - sum;
  std::vector<long long> f = times_one_minus_t(out.alpha, 1);
  f.resize(std::max<std::size_t>(f.size(), out.r + 1), 0);
  f[out.r] += out.e0;
  while (!f.empty() && f.back() == 0) f.pop_back();
  out.f = {f, 1};
  const Coefficients dual = dual_hilbert_coefficients(n, ideal, options);
  out.c1_series = dual.values[1];
  out.consistent = dual.series.numerator == out.f.numerator && out.c1 == out.c1_series &&
                   dual.values[0] == out.e0;
  return out;
}

SuperficialElement superficial_element(const Ideal& ideal, const SuperficialRequest& request,
                                       const Options& options) {
  const RingPtr& ring = ideal.ring();
  if (ring->dimension() == 0)
    throw HypothesisError("dimension at least 1", "no superficial element needed in dimension 0");
  ideal.require_mprimary();
  const int w = options.superficial_window;
  const int c_max = request.regular ? 0 : w;
  Rng rng(options.seed ^ kSuperficialSalt);

  for (int attempt = 1; attempt <= kSuperficialAttempts; ++attempt) {
    const Polynomial x = random_combination(ideal.generators(), ring, rng);
    if (ideal.power_basis(2).contains(x)) continue;
    std::vector<Check> checks;
    checks.push_back({"x not in I^2", x.to_string(), "I^2", true});

    // (i) the colon condition on every protected module, smallest c first.
    int c_found = 0;
    bool ok = true;
    for (std::size_t k = 0; k < request.protect.size() && ok; ++k) {
      std::vector<Layer> layers;
      auto layer_at = [&](int n) -> const Layer& {
        while (static_cast<int>(layers.size()) <= n) layers.push_back(layer(request.protect[k], ideal, static_cast<int>(layers.size())));
        return layers[n];
      };
      int c = -1;
      for (int cand = 0; cand <= c_max && c < 0; ++cand) {
        bool all = true;
        for (int n = cand; n <= cand + w && all; ++n) all = colon_condition(layer_at(n), x, cand, n);
        if (all) c = cand;
      }
      checks.push_back({"colon condition on protected module " + std::to_string(k) +
                            " (window-verified)",
                        c, "n in [c, c + " + std::to_string(w) + "]", c >= 0});
      if (c < 0) ok = false;
      c_found = std::max(c_found, c);
    }
    if (!ok) continue;

    // (ii) Ext^1 and Ext^2 maps induced by x : R/I^n -> R/I^(n+1).
    int start = 1;
    if (request.ext_module) {
      const int start_max = request.regular ? 1 : 1 + w;
      int found = -1;
      for (int cand = 1; cand <= start_max && found < 0; ++cand) {
        bool all = true;
        for (int n = cand; n <= cand + w && all; ++n) {
          const auto src = truncation_algebra(ideal, n);
          const auto tgt = truncation_algebra(ideal, n + 1);
          const auto map = multiplication_map(ideal, n, x);
          all = ext_map_injective(1, *request.ext_module, src, tgt, map) &&
                ext_map_injective(2, *request.ext_module, src, tgt, map);
        }
        if (all) found = cand;
      }
      checks.push_back({"Ext^1, Ext^2 maps injective (window-verified)", found,
                        "n in [n0, n0 + " + std::to_string(w) + "]", found >= 0});
      if (found < 0) continue;
      start = found;
    }
    return {x, c_found, start, attempt, std::move(checks)};
  }
  throw BudgetExhausted("superficial element retry budget exhausted for " + ideal.describe());
}

Specialization specialize(const Ideal& ideal, const FPModule& m, const Polynomial& x) {
  const RingPtr s = ideal.ring()->quotient({x});
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(s->reduce(g));
  return {s, make_ideal(s, gens), base_change(m, s)};
}

}  // namespace dualhs
