#include "dualhs/claims.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dualhs {

namespace {

const std::vector<ClaimInfo> kRegistry = {
    {"C0E0", ClaimArguments::module_ideal, "c_0(M) = e_0(M)"},
    {"DUALMULT", ClaimArguments::module_ideal, "e_0(Hom(M, R)) = e_0(M)"},
    {"DEGBOUNDS", ClaimArguments::module_ideal, "deg eps^0 = d and deg eps^1 <= d - 1"},
    {"EX25", ClaimArguments::module_ideal,
     "parameter ideal J: eps^0(n) = l(M/JM) binom(n + d, d) and eps^1(n) = 0"},
    {"PROP33", ClaimArguments::module_ideal,
     "eps^0_M(n) - eps^0_M(n - 1) = eps^0_N(n) past the postulation"},
    {"COR34", ClaimArguments::module_ideal, "c_i(N) = c_i(M) for i < d, three superficial elements"},
    {"PROP41", ClaimArguments::module_ideal,
     "eps^1 series = (f_M - mu h_R + f_L) / (1 - t)^(d + 1); c_1(M) + c_1(L) <= mu e_1(R)"},
    {"THM42", ClaimArguments::module_only,
     "M free <=> eps^1 = 0 <=> deg eps^1 < d - 1 <=> c_1(M) + c_1(L) = mu e_1(R)"},
    {"SEC51", ClaimArguments::module_only, "c_1(N) = r e_0(N) - sum alpha_n over Artinian S"},
    {"PROP53", ClaimArguments::module_ideal, "c_1(M) >= c_1(N) for the Artinian reduction"},
    {"COR56", ClaimArguments::module_ideal,
     "l(Hom_S(N, S/J^n)) <= sum_j binom(d, j) l(Ext^j(M, R/I^(n - j))), n = 1..r"},
    {"THM57", ClaimArguments::module_ideal, "c_1(M) >= r e_0(M) - Phi(M)"},
    {"PROP59", ClaimArguments::module_ideal, "Phi^I(M) >= Phi^(I/(x))(M/xM)"},
    {"THM61", ClaimArguments::module_only,
     "eps^0_M(n) - eps^0_M(n - 1) = eps^0_N(n) for every n >= 0 when x* is regular"},
    {"SEC63", ClaimArguments::ring_only,
     "l(Hom(k, S/n^i)) = mu_1(n^i) for i <= r and = 1 for i > r"},
    {"PROP64", ClaimArguments::module_only, "D(M, t) (1 - t)^d = mu D_S(k, t) for Ulrich M"},
    {"DELTA", ClaimArguments::module_only, "delta_m(M, n) = mu(M) l(m^n / m^(n+1))"},
    {"MATLIS", ClaimArguments::module_only, "l(Hom_S(N, S)) = l(N)"},
};

Json degree_json(int degree) { return degree == kZeroDegree ? Json("-inf") : Json(degree); }

struct Context {
  const ClaimInstance& in;
  const Options& opt;
  VerificationReport& rep;

  const FPModule& module() const { return *in.module; }
  const Ideal& ideal() const { return *in.ideal; }
  const RingPtr& ring() const { return in.ring; }
  int d() const { return ring()->dimension(); }

  void check(std::string name, Json lhs, Json rhs, bool ok) {
    rep.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  }
  void hypothesis(const std::string& name) { rep.quantities["hypotheses"].push_back(name); }

  void gorenstein() {
    require_gorenstein(*ring());
    hypothesis("Gorenstein ring");
  }
  void mcm() {
    require_mcm(module());
    hypothesis("maximal Cohen-Macaulay module");
  }
  void positive_dimension() {
    if (d() < 1) throw HypothesisError("dimension at least 1", ring()->describe());
  }
  void maximal() {
    if (!ideal().is_maximal_ideal()) throw HypothesisError("I = m", ideal().describe());
  }
  void gr_cm() {
    require_associated_graded_cm(ideal());
    hypothesis("G_I(R) Cohen-Macaulay");
  }
};

std::vector<long long> dual_values(const FPModule& m, const Ideal& ideal, int from, int to,
                                   const Options& opt) {
  std::vector<long long> out;
  for (int n = from; n <= to; ++n) out.push_back(static_cast<long long>(dual_hs_value(m, ideal, n, opt.route)));
  return out;
}

// A superficial sequence x_1..x_d taking (R, I, M) to an Artinian (S, J, N).
struct FullReduction {
  RingPtr ring;
  IdealPtr ideal;
  FPModule module;
  std::vector<std::string> sequence;
};

FullReduction reduce_fully(const IdealPtr& start, const FPModule& m, const Options& opt, bool regular,
                           Context& ctx) {
  FullReduction out{start->ring(), start, m, {}};
  const int d = start->ring()->dimension();
  for (int step = 0; step < d; ++step) {
    SuperficialRequest req;
    req.protect.push_back(FPModule::free(out.ring, 1));
    if (regular) req.protect.push_back(syzygy_module(out.module));
    req.ext_module = &out.module;
    req.regular = regular;
    Options o = opt;
    o.seed = opt.seed + static_cast<std::uint64_t>(step);
    const SuperficialElement s = superficial_element(*out.ideal, req, o);
    for (const auto& c : s.checks)
      ctx.check("step " + std::to_string(step + 1) + ": " + c.name, c.lhs, c.rhs, c.ok);
    out.sequence.push_back(s.x.to_string());
    Specialization spec = specialize(*out.ideal, out.module, s.x);
    out.ring = spec.ring;
    out.ideal = spec.ideal;
    out.module = spec.module;
  }
  return out;
}

// Coefficients of sum_{i<r} mu_1(n^(i+1)) t^i + t^e / (1 - t).
std::vector<long long> closed_form(const std::vector<long long>& bass, int e, int count) {
  std::vector<long long> out(count, 0);
  for (int i = 0; i < count; ++i) {
    if (i < static_cast<int>(bass.size())) out[i] += bass[i];
    if (i >= e) out[i] += 1;
  }
  return out;
}

void c0e0(Context& c) {
  c.gorenstein();
  c.mcm();
  const auto dual = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt);
  const auto hs = hilbert_coefficients(c.module(), c.ideal(), c.opt);
  c.rep.quantities["c"] = dual.values;
  c.rep.quantities["e"] = hs.values;
  c.check("c0 = e0", dual.values[0], hs.values[0], dual.values[0] == hs.values[0]);
}

void dualmult(Context& c) {
  c.gorenstein();
  c.mcm();
  const FPModule dual = dual_module(c.module());
  const long long e0 = hilbert_coefficients(c.module(), c.ideal(), c.opt).values[0];
  const long long e0_dual = hilbert_coefficients(dual, c.ideal(), c.opt).values[0];
  c.rep.quantities["dual_module"] = dual.describe();
  c.check("e0(M^dagger) = e0(M)", e0_dual, e0, e0 == e0_dual);
}

void degbounds(Context& c) {
  c.gorenstein();
  c.mcm();
  const auto eps0 = dual_hs_function(c.module(), c.ideal(), c.opt);
  const auto eps1 = ext1_dual_function(c.module(), c.ideal(), c.opt);
  c.check("deg eps0 = d", degree_json(eps0.degree), c.d(), eps0.degree == c.d());
  c.check("deg eps1 <= d - 1", degree_json(eps1.degree), c.d() - 1, eps1.degree <= c.d() - 1);
}

void ex25(Context& c) {
  c.gorenstein();
  c.mcm();
  if (static_cast<int>(c.ideal().size()) != c.d())
    throw HypothesisError("parameter ideal", "needs exactly d = " + std::to_string(c.d()) + " generators");
  c.ideal().require_mprimary();
  c.hypothesis("parameter ideal");
  const long long base = static_cast<long long>(module_truncation_length(c.module(), c.ideal(), 0));
  std::vector<long long> eps0, eps1, expected0, zeros;
  for (int n = 0; n <= c.opt.upto; ++n) {
    eps0.push_back(static_cast<long long>(dual_hs_value(c.module(), c.ideal(), n, c.opt.route)));
    eps1.push_back(static_cast<long long>(ext_dual_value(1, c.module(), c.ideal(), n, c.opt.route)));
    expected0.push_back(base * binomial(n + c.d(), c.d()));
    zeros.push_back(0);
  }
  c.rep.quantities["l(M/JM)"] = base;
  c.check("eps0(n) = l(M/JM) binom(n+d, d)", eps0, expected0, eps0 == expected0);
  c.check("eps1(n) = 0", eps1, zeros, eps1 == zeros);
}

void prop33(Context& c) {
  c.gorenstein();
  c.mcm();
  c.positive_dimension();
  SuperficialRequest req{{FPModule::free(c.ring(), 1)}, &c.module(), false};
  const auto s = superficial_element(c.ideal(), req, c.opt);
  for (const auto& ch : s.checks) c.check(ch.name, ch.lhs, ch.rhs, ch.ok);
  const auto spec = specialize(c.ideal(), c.module(), s.x);
  const auto fM = dual_hs_function(c.module(), c.ideal(), c.opt);
  const auto fN = dual_hs_function(spec.module, *spec.ideal, c.opt);
  const int from = std::max(fM.postulation + 1, fN.postulation);
  const int to = std::max(c.opt.upto, from + c.opt.superficial_window);
  const auto m_vals = dual_values(c.module(), c.ideal(), 0, to, c.opt);
  const auto n_vals = dual_values(spec.module, *spec.ideal, 0, to, c.opt);
  std::vector<long long> diffs, reduced;
  for (int n = from; n <= to; ++n) {
    diffs.push_back(m_vals[n] - (n > 0 ? m_vals[n - 1] : 0));
    reduced.push_back(n_vals[n]);
  }
  int holds_from = to + 1;
  while (holds_from > 0 &&
         m_vals[holds_from - 1] - (holds_from > 1 ? m_vals[holds_from - 2] : 0) == n_vals[holds_from - 1])
    --holds_from;
  c.rep.quantities["x"] = s.x.to_string();
  c.rep.quantities["postulation"] = {fM.postulation, fN.postulation};
  c.rep.quantities["range"] = {from, to};
  c.rep.quantities["identity_holds_from"] = holds_from;
  c.check("eps0_M(n) - eps0_M(n-1) = eps0_N(n)", diffs, reduced, diffs == reduced);
}

void cor34(Context& c) {
  c.gorenstein();
  c.mcm();
  c.positive_dimension();
  const auto cM = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt);
  const std::vector<long long> target(cM.values.begin(), cM.values.begin() + c.d());
  std::vector<Polynomial> used;
  for (std::uint64_t k = 0; used.size() < 3 && k < 12; ++k) {
    Options o = c.opt;
    o.seed = c.opt.seed + k;
    SuperficialRequest req{{FPModule::free(c.ring(), 1)}, &c.module(), false};
    const auto s = superficial_element(c.ideal(), req, o);
    if (std::find(used.begin(), used.end(), s.x) != used.end()) continue;
    used.push_back(s.x);
    const auto spec = specialize(c.ideal(), c.module(), s.x);
    const auto cN = dual_hilbert_coefficients(spec.module, *spec.ideal, c.opt);
    const std::vector<long long> got(cN.values.begin(), cN.values.begin() + c.d());
    c.check("c_i(N) = c_i(M), i < d, x = " + s.x.to_string(), got, target, got == target);
  }
  if (used.size() < 3) throw BudgetExhausted("fewer than three distinct superficial elements");
  c.rep.quantities["c"] = cM.values;
}

void prop41(Context& c) {
  c.gorenstein();
  c.mcm();
  const FPModule L = syzygy_module(c.module());
  const long long mu = static_cast<long long>(c.module().minimal_generators());
  const auto cM = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt);
  const auto cL = dual_hilbert_coefficients(L, c.ideal(), c.opt);
  const auto h = hilbert_coefficients(FPModule::free(c.ring(), 1), c.ideal(), c.opt);
  const SeriesNumerator p = combine({{1, cM.series}, {-mu, h.series}, {1, cL.series}});
  std::vector<long long> eps1;
  for (int n = 0; n <= c.opt.upto; ++n)
    eps1.push_back(static_cast<long long>(ext_dual_value(1, c.module(), c.ideal(), n, c.opt.route)));
  const auto expanded = p.expand(eps1.size());
  c.rep.quantities["f_M"] = cM.series.numerator;
  c.rep.quantities["h_R"] = h.series.numerator;
  c.rep.quantities["f_L"] = cL.series.numerator;
  c.rep.quantities["mu"] = mu;
  c.check("eps1 series = (f_M - mu h_R + f_L)/(1-t)^(d+1)", eps1, expanded, eps1 == expanded);
  c.check("p(1) = 0", p.coefficient(0), 0, p.coefficient(0) == 0);
  const long long bound = mu * h.values[1];
  const long long lhs = cM.values[1] + cL.values[1];
  c.check("c1(M) + c1(L) <= mu e1(R)", lhs, bound, lhs <= bound);
  if (c.d() >= 1) {
    const auto e1f = ext1_dual_function(c.module(), c.ideal(), c.opt);
    const long long lead = e1f.coefficients_in_degree(c.d() - 1)[0];
    c.check("leading coefficient of eps1 = mu e1(R) - c1(M) - c1(L)", lead, bound - lhs, lead == bound - lhs);
  }
}

void thm42(Context& c) {
  c.positive_dimension();
  c.maximal();
  c.gorenstein();
  c.mcm();
  const FPModule L = syzygy_module(c.module());
  const long long mu = static_cast<long long>(c.module().minimal_generators());
  const bool free = c.module().minimal().relations().empty();
  const auto e1f = ext1_dual_function(c.module(), c.ideal(), c.opt);
  const bool zero = e1f.is_zero();
  const bool low = e1f.degree < c.d() - 1;
  const long long c1M = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt).values[1];
  const long long c1L = dual_hilbert_coefficients(L, c.ideal(), c.opt).values[1];
  const long long e1 = hilbert_coefficients(FPModule::free(c.ring(), 1), c.ideal(), c.opt).values[1];
  const bool identity = c1M + c1L == mu * e1;
  c.rep.quantities["free"] = free;
  c.rep.quantities["eps1_degree"] = degree_json(e1f.degree);
  c.rep.quantities["eps1_leading"] = e1f.coefficients_in_degree(c.d() - 1)[0];
  c.rep.quantities["c1(M)+c1(L)"] = c1M + c1L;
  c.rep.quantities["mu e1(R)"] = mu * e1;
  c.check("(a) free <=> (b) eps1 = 0", free, zero, free == zero);
  c.check("(a) free <=> (c) deg eps1 < d - 1", free, low, free == low);
  c.check("(a) free <=> (d) c1(M) + c1(L) = mu e1(R)", free, identity, free == identity);
}

void sec51(Context& c) {
  const auto report = zero_dim_report(c.module(), c.ideal(), c.opt);
  c.hypothesis("Artinian Gorenstein ring");
  c.rep.quantities["r"] = report.r;
  c.rep.quantities["e0"] = report.e0;
  c.rep.quantities["alpha"] = report.alpha;
  c.rep.quantities["c1"] = report.c1;
  c.rep.quantities["f"] = report.f.to_string();
  const auto dual = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt);
  c.check("c1 = r e0 - sum alpha_n", report.c1, report.c1_series, report.c1 == report.c1_series);
  c.check("f = (1-t) sum alpha_n t^n + e0 t^r", report.f.numerator, dual.series.numerator,
          report.f.numerator == dual.series.numerator);
  c.check("c0 = e0", dual.values[0], report.e0, dual.values[0] == report.e0);
}

void prop53(Context& c) {
  c.gr_cm();
  c.gorenstein();
  c.mcm();
  const auto red = reduce_fully(c.in.ideal, c.module(), c.opt, false, c);
  const long long c1M = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt).values[1];
  const long long c1N = dual_hilbert_coefficients(red.module, *red.ideal, c.opt).values[1];
  c.rep.quantities["sequence"] = red.sequence;
  c.check("c1(M) >= c1(N)", c1M, c1N, c1M >= c1N);
}

void cor56(Context& c) {
  c.gr_cm();
  c.gorenstein();
  c.mcm();
  const auto red = reduce_fully(c.in.ideal, c.module(), c.opt, false, c);
  const int r = minimal_reduction(c.ideal(), c.opt.seed).r;
  c.rep.quantities["sequence"] = red.sequence;
  c.rep.quantities["r"] = r;
  for (int n = 1; n <= r; ++n) {
    const auto lhs = static_cast<long long>(hom_length(red.module, truncation_algebra(*red.ideal, n), c.opt.route));
    long long rhs = 0;
    for (int j = 0; j <= c.d(); ++j)
      rhs += binomial(c.d(), j) *
             static_cast<long long>(ext_length(j, c.module(), truncation_algebra(c.ideal(), n - j), c.opt.route));
    c.check("n = " + std::to_string(n), lhs, rhs, lhs <= rhs);
  }
}

void thm57(Context& c) {
  c.gr_cm();
  c.gorenstein();
  c.mcm();
  const int r = minimal_reduction(c.ideal(), c.opt.seed).r;
  const long long e0 = hilbert_coefficients(c.module(), c.ideal(), c.opt).values[0];
  const long long c1 = dual_hilbert_coefficients(c.module(), c.ideal(), c.opt).values[1];
  const long long p = phi(c.module(), c.ideal(), r, c.opt.route);
  c.rep.quantities["r"] = r;
  c.rep.quantities["e0"] = e0;
  c.rep.quantities["phi"] = p;
  c.rep.quantities["c1"] = c1;
  c.check("c1 >= r e0 - phi", c1, r * e0 - p, c1 >= r * e0 - p);
}

void prop59(Context& c) {
  c.gr_cm();
  c.gorenstein();
  c.mcm();
  c.positive_dimension();
  SuperficialRequest req{{FPModule::free(c.ring(), 1)}, nullptr, false};
  const auto s = superficial_element(c.ideal(), req, c.opt);
  for (const auto& ch : s.checks) c.check(ch.name, ch.lhs, ch.rhs, ch.ok);
  const auto spec = specialize(c.ideal(), c.module(), s.x);
  const int r = minimal_reduction(c.ideal(), c.opt.seed).r;
  const long long before = phi(c.module(), c.ideal(), r, c.opt.route);
  const long long after = phi(spec.module, *spec.ideal, r, c.opt.route);
  c.rep.quantities["x"] = s.x.to_string();
  c.rep.quantities["r"] = r;
  c.check("Phi(M) >= Phi(M/xM)", before, after, before >= after);
}

void thm61(Context& c) {
  c.positive_dimension();
  c.maximal();
  c.gorenstein();
  if (!c.ring()->graded()) throw HypothesisError("G_m(R) Gorenstein", "needs a graded ring");
  c.hypothesis("G_m(R) Gorenstein");
  c.mcm();
  const FPModule L = syzygy_module(c.module());
  SuperficialRequest req{{FPModule::free(c.ring(), 1), L}, &c.module(), true};
  const auto s = superficial_element(c.ideal(), req, c.opt);
  for (const auto& ch : s.checks) c.check(ch.name, ch.lhs, ch.rhs, ch.ok);
  const auto spec = specialize(c.ideal(), c.module(), s.x);
  const auto m_vals = dual_values(c.module(), c.ideal(), 0, c.opt.upto, c.opt);
  const auto n_vals = dual_values(spec.module, *spec.ideal, 0, c.opt.upto, c.opt);
  std::vector<long long> diffs;
  for (int n = 0; n <= c.opt.upto; ++n) diffs.push_back(m_vals[n] - (n > 0 ? m_vals[n - 1] : 0));
  c.rep.quantities["x"] = s.x.to_string();
  c.check("eps0_M(n) - eps0_M(n-1) = eps0_N(n), n = 0.." + std::to_string(c.opt.upto), diffs,
          n_vals, diffs == n_vals);
}

void tail_report(Context& c, const std::vector<long long>& bass, const std::vector<long long>& series,
                 int r) {
  const int count = static_cast<int>(series.size());
  const bool at_r = closed_form(bass, r, count) == series;
  const bool at_r1 = closed_form(bass, r + 1, count) == series;
  c.rep.quantities["tail"] = {{"r", r},
                              {"t^r/(1-t) matches", at_r},
                              {"t^(r+1)/(1-t) matches", at_r1}};
}

void prop64(Context& c) {
  c.positive_dimension();
  c.maximal();
  c.gorenstein();
  if (!c.ring()->graded()) throw HypothesisError("G_m(R) Gorenstein", "needs a graded ring");
  c.mcm();
  const auto u = ulrich_check(c.module(), c.opt);
  if (!u.ulrich) throw HypothesisError("Ulrich module", "e0 = " + std::to_string(u.e0) + ", mu = " + std::to_string(u.mu));
  c.hypothesis("Ulrich module");
  const auto red = reduce_fully(c.in.ideal, c.module(), c.opt, true, c);
  const auto mu = static_cast<long long>(u.mu);
  const FiniteLengthModule bar = as_finite_length(red.module);
  c.check("M/JM = k^mu", static_cast<long long>(bar.length()),
          static_cast<long long>(red.module.minimal_generators()),
          static_cast<long long>(bar.length()) == mu && red.module.minimal_generators() == u.mu);
  const FPModule k = FPModule::residue_field(red.ring);
  std::vector<long long> dk;
  for (int n = 0; n <= c.opt.upto; ++n)
    dk.push_back(static_cast<long long>(hom_length(k, truncation_algebra(*red.ideal, n + 1), c.opt.route)));
  auto lhs = times_one_minus_t(dual_values(c.module(), c.ideal(), 0, c.opt.upto, c.opt), c.d());
  lhs.resize(dk.size());
  std::vector<long long> rhs;
  for (const auto v : dk) rhs.push_back(mu * v);
  c.rep.quantities["sequence"] = red.sequence;
  c.rep.quantities["D_k"] = dk;
  c.check("D(M,t)(1-t)^d = mu D_S(k,t)", lhs, rhs, lhs == rhs);
  const int r = minimal_reduction(*red.ideal, c.opt.seed).r;
  std::vector<long long> bass;
  for (int i = 1; i <= r; ++i) bass.push_back(static_cast<long long>(bass_mu1(red.ring, i)));
  tail_report(c, bass, dk, r);
}

void sec63(Context& c) {
  if (!c.ring()->artinian()) throw HypothesisError("Artinian ring", c.ring()->describe());
  c.gorenstein();
  const auto n = maximal_ideal(c.ring());
  const int r = minimal_reduction(*n, c.opt.seed).r;
  const FPModule k = FPModule::residue_field(c.ring());
  std::vector<long long> bass, series;
  for (int i = 1; i <= r + c.opt.superficial_window; ++i) {
    const auto hom = static_cast<long long>(hom_length(k, truncation_algebra(*n, i), c.opt.route));
    series.push_back(hom);
    if (i <= r) {
      const auto mu1 = static_cast<long long>(bass_mu1(c.ring(), i));
      bass.push_back(mu1);
      c.check("i = " + std::to_string(i) + ": l(Hom(k, S/n^i)) = mu_1(n^i)", hom, mu1, hom == mu1);
    } else {
      c.check("i = " + std::to_string(i) + ": l(Hom(k, S/n^i)) = 1", hom, 1, hom == 1);
    }
  }
  c.rep.quantities["r"] = r;
  c.rep.quantities["bass"] = bass;
  c.rep.quantities["D_k"] = series;
  tail_report(c, bass, series, r);
}

void delta(Context& c) {
  c.gorenstein();
  const auto mu = static_cast<long long>(c.module().minimal_generators());
  std::vector<long long> lhs, rhs;
  for (int n = 0; n <= c.opt.upto; ++n) {
    lhs.push_back(static_cast<long long>(dual_hilbert_function_delta(c.module(), c.ideal(), n)));
    rhs.push_back(mu * static_cast<long long>(graded_piece(c.ideal(), n).length()));
  }
  c.check("delta_m(M, n) = mu l(m^n/m^(n+1))", lhs, rhs, lhs == rhs);
}

void matlis(Context& c) {
  if (!c.ring()->artinian()) throw HypothesisError("Artinian ring", c.ring()->describe());
  c.gorenstein();
  const auto hom = static_cast<long long>(hom_length(c.module(), artinian_ring_module(*c.ring()), c.opt.route));
  const auto len = static_cast<long long>(as_finite_length(c.module()).length());
  c.check("l(Hom(N, S)) = l(N)", hom, len, hom == len);
}

const std::map<std::string, std::function<void(Context&)>>& handlers() {
  static const std::map<std::string, std::function<void(Context&)>> table = {
      {"C0E0", c0e0},     {"DUALMULT", dualmult}, {"DEGBOUNDS", degbounds}, {"EX25", ex25},
      {"PROP33", prop33}, {"COR34", cor34},       {"PROP41", prop41},       {"THM42", thm42},
      {"SEC51", sec51},   {"PROP53", prop53},     {"COR56", cor56},         {"THM57", thm57},
      {"PROP59", prop59}, {"THM61", thm61},       {"SEC63", sec63},         {"PROP64", prop64},
      {"DELTA", delta},   {"MATLIS", matlis},
  };
  return table;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() { return kRegistry; }

const ClaimInfo& claim_info(const std::string& id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return info;
  throw std::invalid_argument("unknown claim " + id);
}

VerificationReport verify(const std::string& claim, const ClaimInstance& instance,
                          const Options& options) {
  const ClaimInfo& info = claim_info(claim);
  ClaimInstance in = instance;
  if (!in.ring) in.ring = in.module ? in.module->ring() : in.ideal ? in.ideal->ring() : nullptr;
  if (!in.ring) throw std::invalid_argument(claim + " needs a ring");
  if (info.arguments != ClaimArguments::ring_only && !in.module)
    throw std::invalid_argument(claim + " needs a module");
  if (info.arguments == ClaimArguments::module_ideal && !in.ideal)
    throw std::invalid_argument(claim + " needs an ideal");
  if (!in.ideal) in.ideal = maximal_ideal(in.ring);

  VerificationReport rep;
  rep.claim = claim;
  rep.instance = (in.module ? "M = " + in.module->describe() + ", " : "") + "R = " + in.ring->describe() +
                 ", I = " + in.ideal->describe();
  Context ctx{in, options, rep};
  try {
    in.ideal->require_mprimary();
    handlers().at(claim)(ctx);
    const bool all = !rep.checks.empty() &&
                     std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.ok; });
    rep.verdict = all ? "pass" : "fail";
  } catch (const HypothesisError& e) {
    rep.verdict = "inconclusive";
    rep.error = e.what();
  } catch (const BudgetExhausted& e) {
    rep.verdict = "inconclusive";
    rep.error = e.what();
  }
  return rep;
}

}  // namespace dualhs
