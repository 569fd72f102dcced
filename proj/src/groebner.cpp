#include "dualhs/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace dualhs {

namespace {

bool leads_divide(const VectorTerm& g, const VectorTerm& t) {
  return g.comp == t.comp && g.mono.divides(t.mono);
}

}  // namespace

FreeVector reduce_vector(const FreeVector& f, const std::vector<FreeVector>& divisors,
                         ReductionStrategy strategy) {
  std::vector<VectorTerm> remainder;
  FreeVector r = f;
  std::vector<std::size_t> candidates;
  while (!r.is_zero()) {
    const VectorTerm& lt = r.leading_term();
    candidates.clear();
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k].is_zero() || !leads_divide(divisors[k].leading_term(), lt)) continue;
      candidates.push_back(k);
      if (strategy.kind == ReductionStrategy::Kind::first) break;
    }
    if (candidates.empty()) {
      remainder.push_back(lt);
      r.drop_leading();
      continue;
    }
    std::size_t pick = candidates.front();
    if (strategy.kind == ReductionStrategy::Kind::last) {
      pick = candidates.back();
    } else if (strategy.kind == ReductionStrategy::Kind::random && strategy.rng) {
      pick = candidates[(*strategy.rng)() % candidates.size()];
    }
    const VectorTerm& lg = divisors[pick].leading_term();
    const Scalar c = lt.coeff / lg.coeff;
    const Monomial m = lt.mono.quotient(lg.mono);
    r = r.minus_multiple(c, m, divisors[pick]);
  }
  return FreeVector(f.signature(), f.rank(), std::move(remainder));
}

FreeVector s_vector(const FreeVector& f, const FreeVector& g) {
  const VectorTerm& a = f.leading_term();
  const VectorTerm& b = g.leading_term();
  if (a.comp != b.comp) throw std::invalid_argument("S-vector across components");
  const Monomial l = a.mono.lcm(b.mono);
  FreeVector left = f.times_monomial(a.coeff.inverse(), l.quotient(a.mono));
  return left.minus_multiple(b.coeff.inverse(), l.quotient(b.mono), g);
}

// ---------------------------------------------------------------------------
// GroebnerBasis

bool GroebnerBasis::is_unit() const {
  for (const auto& g : elements_)
    if (g.leading_term().mono.is_one()) return rank_ == 1;
  return false;
}

FreeVector GroebnerBasis::normal_form(const FreeVector& f, ReductionStrategy strategy) const {
  if (f.rank() != rank_) throw std::invalid_argument("normal form: rank mismatch");
  return reduce_vector(f, elements_, strategy);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f, ReductionStrategy strategy) const {
  if (rank_ != 1) throw std::invalid_argument("polynomial normal form needs an ideal basis");
  return normal_form(FreeVector::from_polynomials(sig_, {f}), strategy).entry(0);
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.entry(0));
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_term().mono);
  return out;
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i].leading_term().comp != elements_[j].leading_term().comp) continue;
      if (!reduce_vector(s_vector(elements_[i], elements_[j]), elements_).is_zero()) return false;
    }
  return true;
}

bool GroebnerBasis::is_reduced() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!elements_[i].leading_term().coeff.is_one()) return false;
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      if (i == j) continue;
      const VectorTerm& lead = elements_[j].leading_term();
      for (const auto& t : elements_[i].terms())
        if (leads_divide(lead, t)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Buchberger with the Gebauer-Moeller installation of the chain and product
// criteria.

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

class Buchberger {
 public:
  Buchberger(const SigPtr& sig, std::size_t rank) : sig_(sig), rank_(rank) {}

  void add(FreeVector h) {
    h = reduce_vector(h, active_elements());
    if (h.is_zero()) return;
    install(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        const int c = compare_pot(it->lcm, it->comp, best->lcm, best->comp, sig_->order(),
                                  sig_->nvars());
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      FreeVector s = reduce_vector(s_vector(all_[p.i], all_[p.j]), active_elements());
      if (!s.is_zero()) install(s.monic());
    }
  }

  std::vector<FreeVector> reduced_basis() const {
    std::vector<FreeVector> minimal = active_elements();
    std::vector<FreeVector> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<FreeVector> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      out.push_back(reduce_vector(minimal[k], others).monic());
    }
    const TermOrder order = sig_->order();
    const std::size_t n = sig_->nvars();
    std::sort(out.begin(), out.end(), [&](const FreeVector& a, const FreeVector& b) {
      const VectorTerm& x = a.leading_term();
      const VectorTerm& y = b.leading_term();
      return compare_pot(x.mono, x.comp, y.mono, y.comp, order, n) > 0;
    });
    return out;
  }

 private:
  std::vector<FreeVector> active_elements() const {
    std::vector<FreeVector> out;
    for (std::size_t k = 0; k < all_.size(); ++k)
      if (active_[k]) out.push_back(all_[k]);
    return out;
  }

  bool disjoint(std::size_t a, std::size_t b) const {
    return rank_ == 1 && all_[a].leading_term().mono.coprime(all_[b].leading_term().mono);
  }

  void install(FreeVector h) {
    const std::size_t hi = all_.size();
    all_.push_back(std::move(h));
    active_.push_back(false);
    const VectorTerm& hl = all_[hi].leading_term();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const VectorTerm& gl = all_[g].leading_term();
      if (gl.comp != hl.comp) continue;
      candidates.push_back({g, hi, gl.mono.lcm(hl.mono), hl.comp});
    }

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = disjoint(p.i, p.j);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
          if (candidates[l].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (const Pair& p : kept)
      if (!disjoint(p.i, p.j)) fresh.push_back(p);

    // Old pairs made redundant by the new element.
    std::vector<Pair> survivors;
    for (const Pair& p : pairs_) {
      bool keep = true;
      if (p.comp == hl.comp && hl.mono.divides(p.lcm)) {
        const Monomial li = all_[p.i].leading_term().mono.lcm(hl.mono);
        const Monomial lj = all_[p.j].leading_term().mono.lcm(hl.mono);
        keep = li == p.lcm || lj == p.lcm;
      }
      if (keep) survivors.push_back(p);
    }
    survivors.insert(survivors.end(), fresh.begin(), fresh.end());
    pairs_.swap(survivors);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && leads_divide(hl, all_[g].leading_term())) active_[g] = false;
    active_[hi] = true;
  }

  SigPtr sig_;
  std::size_t rank_;
  std::vector<FreeVector> all_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis module_groebner(const std::vector<FreeVector>& gens, const SigPtr& sig,
                              std::size_t rank) {
  Buchberger engine(sig, rank);
  // Feeding generators smallest-first keeps early reductions cheap.
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> nonzero;
  for (std::size_t k : order) {
    if (gens[k].rank() != rank) throw std::invalid_argument("generator rank mismatch");
    if (!same_signature(gens[k].signature(), sig))
      throw SignatureMismatch("generator from a different ring");
    if (!gens[k].is_zero()) nonzero.push_back(k);
  }
  std::stable_sort(nonzero.begin(), nonzero.end(), [&](std::size_t a, std::size_t b) {
    const VectorTerm& x = gens[a].leading_term();
    const VectorTerm& y = gens[b].leading_term();
    return compare_pot(x.mono, x.comp, y.mono, y.comp, sig->order(), sig->nvars()) < 0;
  });
  for (std::size_t k : nonzero) engine.add(gens[k]);
  engine.run();
  GroebnerBasis gb(sig, rank);
  gb.elements_ = engine.reduced_basis();
  return gb;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const SigPtr& sig) {
  std::vector<FreeVector> vectors;
  vectors.reserve(gens.size());
  for (const auto& g : gens) vectors.push_back(FreeVector::from_polynomials(sig, {g}));
  return module_groebner(vectors, sig, 1);
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, int n,
                                    const SigPtr& sig) {
  if (n <= 0) return {Polynomial::constant(sig, 1)};
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  // Multisets of generator indices of size n, in lexicographic order.
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    Polynomial p = gens[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) p *= gens[idx[k]];
    if (!p.is_zero()) out.push_back(std::move(p));
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    const std::size_t v = idx[k - 1] + 1;
    for (std::size_t l = k - 1; l < idx.size(); ++l) idx[l] = v;
  }
  return out;
}

FreeVector reduce_mod_ideal(const FreeVector& v, const GroebnerBasis& ideal) {
  if (ideal.is_zero()) return v;
  std::vector<Polynomial> parts = v.entries();
  for (auto& p : parts) p = ideal.normal_form(p);
  return FreeVector::from_polynomials(v.signature(), parts);
}

std::vector<FreeVector> ideal_block(const GroebnerBasis& ideal, std::size_t rank) {
  std::vector<FreeVector> out;
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& g : ideal.elements()) out.push_back(g.embedded(rank, i));
  return out;
}

SyzygyPresentation syzygy_matrix(const std::vector<FreeVector>& columns, std::size_t p,
                                 const GroebnerBasis& ideal) {
  SyzygyPresentation out;
  out.base = columns;
  const std::size_t q = columns.size();
  if (q == 0) return out;
  const SigPtr& sig = columns.front().signature();
  const std::size_t total = p + q;
  std::vector<FreeVector> gens;
  gens.reserve(q + total * ideal.size());
  for (std::size_t j = 0; j < q; ++j) {
    if (columns[j].rank() != p) throw std::invalid_argument("syzygy column rank mismatch");
    gens.push_back(columns[j].embedded(total, 0) + FreeVector::unit(sig, total, p + j));
  }
  for (auto& g : ideal_block(ideal, total)) gens.push_back(std::move(g));
  const GroebnerBasis gb = module_groebner(gens, sig, total);
  for (const auto& g : gb.elements()) {
    if (g.leading_term().comp < p) continue;
    FreeVector s = reduce_mod_ideal(g.slice(p, total), ideal);
    if (!s.is_zero()) out.syzygies.push_back(std::move(s));
  }
  return out;
}

bool in_submodule(const FreeVector& v, const std::vector<FreeVector>& gens, std::size_t rank,
                  const GroebnerBasis& ideal) {
  std::vector<FreeVector> all = gens;
  for (auto& g : ideal_block(ideal, rank)) all.push_back(std::move(g));
  return module_groebner(all, v.signature(), rank).contains(v);
}

std::vector<FreeVector> prune_generators(std::vector<FreeVector> gens, std::size_t rank,
                                         const GroebnerBasis& ideal) {
  std::vector<FreeVector> current;
  for (auto& g : gens) {
    FreeVector r = reduce_mod_ideal(g, ideal);
    if (r.is_zero()) continue;
    const FreeVector m = r.monic();
    if (std::any_of(current.begin(), current.end(),
                    [&](const FreeVector& c) { return c.monic() == m; }))
      continue;
    current.push_back(std::move(r));
  }
  // Try to discard high-degree generators first.
  std::vector<std::size_t> order(current.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return current[a].total_degree() > current[b].total_degree();
  });
  std::vector<bool> alive(current.size(), true);
  for (std::size_t k : order) {
    std::vector<FreeVector> others;
    for (std::size_t l = 0; l < current.size(); ++l)
      if (alive[l] && l != k) others.push_back(current[l]);
    if (in_submodule(current[k], others, rank, ideal)) alive[k] = false;
  }
  std::vector<FreeVector> out;
  for (std::size_t l = 0; l < current.size(); ++l)
    if (alive[l]) out.push_back(std::move(current[l]));
  return out;
}

}  // namespace dualhs
