#include "dualhs/ring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "dualhs/linalg.hpp"

namespace dualhs {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); }))
      out.push_back(g);
  return out;
}

std::vector<long long> poly_sub_shifted(std::vector<long long> a, const std::vector<long long>& b,
                                        std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

std::vector<long long> hilbert_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    std::vector<long long> out{1};
    for (const auto& g : gens) out = poly_sub_shifted(out, out, g.degree());
    return out;
  }
  const Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g.lcm(m).quotient(m));
  return poly_sub_shifted(hilbert_rec(gens), hilbert_rec(colon), m.degree());
}

}  // namespace

std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t) {
  return hilbert_rec(std::move(gens));
}

std::vector<std::size_t> independent_variables(const std::vector<Monomial>& leads,
                                               std::size_t nvars) {
  unsigned best = 0;
  int best_size = -1;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars && inside; ++i)
        if (m[i] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars; ++i)
    if (best & (1u << i)) out.push_back(i);
  return out;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars,
                                         TermOrder order) {
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
    return {};
  if (!independent_variables(leads, nvars).empty())
    throw std::domain_error("quotient is not finite dimensional");
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  std::vector<Monomial> layer{Monomial()};
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [&](const Monomial& a, const Monomial& b) {
      return compare(a, b, order, nvars) < 0;
    });
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& m : layer)
      for (std::size_t i = 0; i < nvars; ++i) {
        const Monomial c = m * Monomial::variable(i);
        if (standard(c) && std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
      }
    layer.swap(next);
  }
  return out;
}

ArtinianShape artinian_shape(const GroebnerBasis& gb) {
  const SigPtr& sig = gb.signature();
  const auto basis = standard_monomials(gb.leading_monomials(), sig->nvars(), sig->order());
  ArtinianShape shape;
  shape.length = basis.size();
  if (basis.empty()) return shape;
  const std::size_t L = basis.size();
  const std::size_t n = sig->nvars();
  SparseMatrix stacked(sig->field(), n * L, L);
  for (std::size_t k = 0; k < L; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial image =
          gb.normal_form(Polynomial::monomial(sig, Scalar::one(sig->field()),
                                              basis[k] * Monomial::variable(i)));
      for (const auto& t : image.terms()) {
        const auto pos = std::find(basis.begin(), basis.end(), t.mono) - basis.begin();
        stacked.add(i * L + static_cast<std::size_t>(pos), k, t.coeff);
      }
    }
  shape.socle_dimension = L - stacked.rank();
  return shape;
}

bool variables_nilpotent(const GroebnerBasis& gb) {
  const SigPtr& sig = gb.signature();
  const auto leads = gb.leading_monomials();
  if (!independent_variables(leads, sig->nvars()).empty()) return false;
  const std::size_t L = standard_monomials(leads, sig->nvars(), sig->order()).size();
  if (L == 0) return false;
  for (std::size_t i = 0; i < sig->nvars(); ++i) {
    const Polynomial power = Polynomial::monomial(
        sig, Scalar::one(sig->field()), Monomial::variable(i, static_cast<std::uint32_t>(L)));
    if (!gb.normal_form(power).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(SigPtr sig, std::vector<Polynomial> gens)
    : sig_(std::move(sig)), gens_(std::move(gens)), gb_(sig_, 1) {}

RingPtr QuotientRing::make(const SigPtr& sig, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (!same_signature(g.signature(), sig))
      throw SignatureMismatch("defining polynomial from a different ring");
    if (!g.is_zero()) kept.push_back(g);
  }
  std::shared_ptr<QuotientRing> ring(new QuotientRing(sig, std::move(kept)));
  ring->classify();
  return ring;
}

void QuotientRing::classify() {
  gb_ = buchberger(gens_, sig_);
  if (gb_.is_unit()) throw std::invalid_argument("defining ideal is the unit ideal");
  graded_ = std::all_of(gb_.elements().begin(), gb_.elements().end(),
                        [](const FreeVector& g) { return g.entry(0).is_homogeneous(); });
  const auto leads = gb_.leading_monomials();
  const std::size_t n = sig_->nvars();
  dimension_ = static_cast<int>(independent_variables(leads, n).size());

  if (graded_) {
    // h(t) = K(t) / (1-t)^(n-d).
    std::vector<long long> h = monomial_hilbert_numerator(leads, n);
    for (std::size_t k = 0; k < n - static_cast<std::size_t>(dimension_); ++k) {
      std::vector<long long> q(h.size() > 1 ? h.size() - 1 : 1, 0);
      long long acc = 0;
      for (std::size_t j = 0; j + 1 < h.size(); ++j) {
        acc += h[j];
        q[j] = acc;
      }
      h = q;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    h_numerator_ = h;
    multiplicity_ = 0;
    for (long long c : h) multiplicity_ += c;
  }

  if (dimension_ == 0) {
    artinian_ = variables_nilpotent(gb_);
    if (!artinian_) return;
    const ArtinianShape shape = artinian_shape(gb_);
    multiplicity_ = static_cast<long long>(shape.length);
    if (!graded_) h_numerator_ = {multiplicity_};
    cohen_macaulay_ = true;
    gorenstein_ = shape.socle_dimension == 1;
    return;
  }
  if (!graded_) return;

  // Length of R/(theta) for a linear system of parameters equals e_0 exactly
  // when R is Cohen-Macaulay; the socle of that Artinian reduction decides
  // the Gorenstein property.
  Rng rng(0x6a09e667f3bcc909ULL);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Polynomial> extra = gens_;
    for (int k = 0; k < dimension_; ++k) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < n; ++i)
        terms.push_back({Scalar::random_nonzero(sig_->field(), rng), Monomial::variable(i)});
      extra.emplace_back(sig_, terms);
    }
    const GroebnerBasis reduction = buchberger(extra, sig_);
    if (!independent_variables(reduction.leading_monomials(), n).empty()) continue;
    const ArtinianShape shape = artinian_shape(reduction);
    cohen_macaulay_ = static_cast<long long>(shape.length) == multiplicity_;
    gorenstein_ = cohen_macaulay_ && shape.socle_dimension == 1;
    return;
  }
  throw BudgetExhausted("no linear system of parameters found for " + describe());
}

QuotientRing::Regime QuotientRing::regime() const {
  if (artinian_) return Regime::artinian;
  if (graded_) return Regime::graded;
  return Regime::unsupported;
}

RingPtr QuotientRing::quotient(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return make(sig_, gens);
}

void QuotientRing::require_supported(const std::string& what) const {
  if (regime() == Regime::unsupported)
    throw HypothesisError("graded or local Artinian ring",
                          what + " over " + describe() + " is not supported");
}

std::string QuotientRing::describe() const {
  std::string out = sig_->field().name() + "[";
  for (std::size_t i = 0; i < sig_->nvars(); ++i) {
    if (i) out += ",";
    out += sig_->variables()[i];
  }
  out += "]";
  if (!gens_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ", ";
      out += gens_[i].to_string();
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// ArtinianAlgebra

ArtinianAlgebra::ArtinianAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
  const SigPtr& sig = gb_.signature();
  basis_ = standard_monomials(gb_.leading_monomials(), sig->nvars(), sig->order());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    index_.emplace(basis_[k], static_cast<std::uint32_t>(k));
  table_.assign(sig->nvars(), std::vector<SparseVec>(basis_.size()));
  for (std::size_t i = 0; i < sig->nvars(); ++i)
    for (std::size_t k = 0; k < basis_.size(); ++k)
      table_[i][k] = monomial_coordinates(basis_[k] * Monomial::variable(i));
}

SparseVec ArtinianAlgebra::coordinates(const Polynomial& f) const {
  SparseVec out;
  const Polynomial r = gb_.normal_form(f);
  for (const auto& t : r.terms()) out.emplace_back(index_.at(t.mono), t.coeff);
  return sparse_combine(std::move(out));
}

SparseVec ArtinianAlgebra::monomial_coordinates(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = nf_cache_.find(m);
    if (it != nf_cache_.end()) return it->second;
  }
  SparseVec coords;
  auto direct = index_.find(m);
  if (direct != index_.end()) {
    coords.emplace_back(direct->second, Scalar::one(field()));
  } else {
    coords = coordinates(Polynomial::monomial(signature(), Scalar::one(field()), m));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return nf_cache_.emplace(m, std::move(coords)).first->second;
}

SparseVec ArtinianAlgebra::multiply(const Polynomial& f, std::size_t k) const {
  SparseVec acc;
  for (const auto& t : f.terms())
    for (const auto& [i, c] : monomial_coordinates(t.mono * basis_[k]))
      acc.emplace_back(i, c * t.coeff);
  return sparse_combine(std::move(acc));
}

Polynomial ArtinianAlgebra::element(const SparseVec& coords) const {
  std::vector<Term> terms;
  for (const auto& [i, c] : coords) terms.push_back({c, basis_[i]});
  return Polynomial(signature(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (!same_signature(g.signature(), ring_->signature()))
      throw SignatureMismatch("ideal generator from a different ring");
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) gens_.push_back(std::move(r));
  }
}

const GroebnerBasis& Ideal::power_basis(int n) const {
  if (n < 0) n = 0;
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = powers_.find(n);
  if (it != powers_.end()) return *it->second;
  const SigPtr& sig = ring_->signature();
  int start = 0;
  for (const auto& [k, gb] : powers_)
    if (k <= n) start = k;
  if (powers_.empty() || powers_.begin()->first > n) {
    powers_[0] = std::make_unique<GroebnerBasis>(buchberger({ring_->one()}, sig));
    start = 0;
  }
  for (int k = start + 1; k <= n; ++k) {
    if (powers_.count(k)) continue;
    std::vector<Polynomial> gens = ring_->defining_generators();
    if (k == 1) {
      gens.insert(gens.end(), gens_.begin(), gens_.end());
    } else {
      for (const auto& h : powers_.at(k - 1)->polynomials())
        for (const auto& g : gens_) {
          Polynomial p = ring_->reduce(g * h);
          if (!p.is_zero()) gens.push_back(std::move(p));
        }
    }
    powers_[k] = std::make_unique<GroebnerBasis>(buchberger(gens, sig));
  }
  return *powers_.at(n);
}

std::vector<Polynomial> Ideal::power_generators(int n) const {
  std::vector<Polynomial> out;
  for (const auto& p : ideal_power(gens_, n, ring_->signature())) {
    Polynomial r = ring_->reduce(p);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::size_t Ideal::colength(int n) const {
  if (n <= 0) return 0;
  const GroebnerBasis& gb = power_basis(n);
  return standard_monomials(gb.leading_monomials(), ring_->nvars(), ring_->signature()->order())
      .size();
}

AlgebraPtr Ideal::truncation(int n) const {
  if (n <= 0) return nullptr;
  require_mprimary();
  const GroebnerBasis& gb = power_basis(n);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = truncations_.find(n);
  if (it != truncations_.end()) return it->second;
  auto algebra = std::make_shared<const ArtinianAlgebra>(gb);
  truncations_.emplace(n, algebra);
  return algebra;
}

bool Ideal::is_mprimary() const {
  if (mprimary_ < 0) {
    const GroebnerBasis& gb = power_basis(1);
    mprimary_ = !gb.is_unit() && variables_nilpotent(gb) ? 1 : 0;
  }
  return mprimary_ == 1;
}

void Ideal::require_mprimary() const {
  if (!is_mprimary()) throw HypothesisError("m-primary ideal", describe() + " is not m-primary");
}

bool Ideal::is_maximal_ideal() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) vars.push_back(ring_->variable(i));
  std::vector<Polynomial> all = ring_->defining_generators();
  all.insert(all.end(), vars.begin(), vars.end());
  return power_basis(1) == buchberger(all, ring_->signature());
}

std::string Ideal::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

std::shared_ptr<const ReductionData> Ideal::cached_reduction(std::uint64_t seed) const {
  std::lock_guard lock(mutex_);
  const auto it = reductions_.find(seed);
  return it == reductions_.end() ? nullptr : it->second;
}

void Ideal::cache_reduction(std::uint64_t seed, std::shared_ptr<const ReductionData> data) const {
  std::lock_guard lock(mutex_);
  reductions_.emplace(seed, std::move(data));
}

IdealPtr make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return std::make_shared<const Ideal>(ring, gens);
}

IdealPtr maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return make_ideal(ring, vars);
}

bool is_mprimary(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return Ideal(ring, gens).is_mprimary();
}

}  // namespace dualhs
