#include "dualhs/fpmodule.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dualhs {

struct FPModule::State {
  std::mutex mutex;
  bool is_minimal = false;
  std::shared_ptr<const FPModule> minimal;
  Resolution resolution;
};

namespace {

FreeVector reduce_column(const FreeVector& v, const QuotientRing& ring) {
  return reduce_mod_ideal(v, ring.ideal());
}

bool has_unit_constant(const Polynomial& f) { return !f.constant_term().is_zero(); }

std::vector<long long> divide_by_one_minus_t(const std::vector<long long>& k) {
  std::vector<long long> q(k.size() > 1 ? k.size() - 1 : 1, 0);
  long long acc = 0;
  for (std::size_t j = 0; j + 1 < k.size(); ++j) {
    acc += k[j];
    q[j] = acc;
  }
  return q;
}

GroebnerBasis system_of_parameters(const QuotientRing& ring, Rng& rng) {
  const SigPtr& sig = ring.signature();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Polynomial> gens = ring.ideal().polynomials();
    for (int k = 0; k < ring.dimension(); ++k) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < ring.nvars(); ++i)
        terms.push_back({Scalar::random_nonzero(ring.field(), rng), Monomial::variable(i)});
      gens.emplace_back(sig, terms);
    }
    GroebnerBasis gb = buchberger(gens, sig);
    if (independent_variables(gb.leading_monomials(), ring.nvars()).empty()) return gb;
  }
  throw BudgetExhausted("no linear system of parameters found for " + ring.describe());
}

}  // namespace

FPModule::FPModule(RingPtr ring, std::size_t rank, std::vector<FreeVector> relations)
    : ring_(std::move(ring)), rank_(rank), state_(std::make_shared<State>()) {
  for (const auto& r : relations) {
    if (r.rank() != rank_) throw std::invalid_argument("relation rank mismatch");
    if (!same_signature(r.signature(), ring_->signature()))
      throw SignatureMismatch("relation from a different ring");
    FreeVector reduced = reduce_column(r, *ring_);
    if (!reduced.is_zero()) relations_.push_back(std::move(reduced));
  }
}

FPModule FPModule::free(const RingPtr& ring, std::size_t rank) { return FPModule(ring, rank, {}); }

FPModule FPModule::zero(const RingPtr& ring) { return FPModule(ring, 0, {}); }

FPModule FPModule::residue_field(const RingPtr& ring) {
  std::vector<FreeVector> rels;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    rels.push_back(FreeVector::from_polynomials(ring->signature(), {ring->variable(i)}));
  return FPModule(ring, 1, rels);
}

std::optional<std::vector<int>> FPModule::generator_degrees() const {
  const std::size_t q = relations_.size();
  std::vector<std::optional<int>> row(rank_), col(q);
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& r : relations_) entries.push_back(r.entries());
  for (const auto& cols : entries)
    for (const auto& e : cols)
      if (!e.is_zero() && !e.is_homogeneous()) return std::nullopt;
  // Propagate deg(col j) - deg(row i) = deg(a_ij) through the bipartite
  // graph of nonzero entries.
  for (std::size_t start = 0; start < rank_; ++start) {
    if (row[start]) continue;
    row[start] = 0;
    std::deque<std::pair<bool, std::size_t>> queue{{true, start}};
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t j = 0; j < q; ++j) {
          const Polynomial& a = entries[j][idx];
          if (a.is_zero()) continue;
          const int want = *row[idx] + a.total_degree();
          if (!col[j]) {
            col[j] = want;
            queue.emplace_back(false, j);
          } else if (*col[j] != want) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t i = 0; i < rank_; ++i) {
          const Polynomial& a = entries[idx][i];
          if (a.is_zero()) continue;
          const int want = *col[idx] - a.total_degree();
          if (!row[i]) {
            row[i] = want;
            queue.emplace_back(true, i);
          } else if (*row[i] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (const auto& r : row) out.push_back(*r);
  return out;
}

const FPModule& FPModule::minimal() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (state_->is_minimal) return *this;
  if (!state_->minimal) {
    auto min = std::make_shared<FPModule>(minimal_presentation(*this));
    min->state_->is_minimal = true;
    state_->minimal = std::move(min);
  }
  return *state_->minimal;
}

Resolution FPModule::resolution(std::size_t maps) const {
  const FPModule& min = minimal();
  std::lock_guard<std::mutex> lock(min.state_->mutex);
  Resolution& res = min.state_->resolution;
  if (res.ranks.empty()) {
    res.ranks = {min.rank_, min.relations_.size()};
    res.maps = {min.relations_};
  }
  const GroebnerBasis& J = ring_->ideal();
  while (res.maps.size() < maps) {
    const auto& last = res.maps.back();
    const std::size_t p = res.ranks[res.maps.size() - 1];
    std::vector<FreeVector> next;
    if (!last.empty()) next = prune_generators(syzygy_matrix(last, p, J).syzygies, last.size(), J);
    res.ranks.push_back(next.size());
    res.maps.push_back(std::move(next));
  }
  Resolution out;
  out.ranks.assign(res.ranks.begin(), res.ranks.begin() + static_cast<std::ptrdiff_t>(maps + 1));
  out.maps.assign(res.maps.begin(), res.maps.begin() + static_cast<std::ptrdiff_t>(maps));
  return out;
}

std::string FPModule::describe() const {
  auto list = [](const std::vector<FreeVector>& vs) {
    std::string out;
    for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? ", " : "") + vs[k].to_string();
    return out;
  };
  if (!embedding_.empty())
    return "sub(R^" + std::to_string(embedding_.front().rank()) + "; " + list(embedding_) + ")";
  if (relations_.empty()) return "R^" + std::to_string(rank_);
  return "coker(R^" + std::to_string(relations_.size()) + " -> R^" + std::to_string(rank_) +
         "; " + list(relations_) + ")";
}

FPModule submodule_presentation(const RingPtr& ring, const std::vector<FreeVector>& generators) {
  if (generators.empty()) return FPModule::zero(ring);
  const std::size_t k = generators.front().rank();
  std::vector<FreeVector> gens;
  for (const auto& g : generators) {
    if (g.rank() != k) throw std::invalid_argument("generators of different ranks");
    gens.push_back(reduce_column(g, *ring));
  }
  FPModule out(ring, gens.size(), syzygy_matrix(gens, k, ring->ideal()).syzygies);
  out.embedding_ = std::move(gens);
  return out;
}

FPModule minimal_presentation(const FPModule& m) {
  const QuotientRing& ring = *m.ring();
  ring.require_supported("minimal presentation");
  if (!ring.artinian() && !m.generator_degrees())
    throw HypothesisError("graded presentation",
                          "minimal presentation of a non-graded module over a positive-dimensional ring");
  const SigPtr& sig = ring.signature();
  std::size_t p = m.rank();
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& r : m.relations()) cols.push_back(r.entries());

  // A unit entry u = a_ij lets generator i be eliminated: clear row i with
  // column j (col_l <- u col_l - a_il col_j), then drop row i and column j.
  for (;;) {
    std::size_t ui = 0, uj = 0;
    bool found = false;
    for (std::size_t j = 0; j < cols.size() && !found; ++j)
      for (std::size_t i = 0; i < p && !found; ++i)
        if (has_unit_constant(cols[j][i])) {
          ui = i;
          uj = j;
          found = true;
        }
    if (!found) break;
    const Polynomial u = cols[uj][ui];
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == uj || cols[l][ui].is_zero()) continue;
      const Polynomial a = cols[l][ui];
      for (std::size_t i = 0; i < p; ++i) cols[l][i] = ring.reduce(u * cols[l][i] - a * cols[uj][i]);
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(uj));
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(ui));
    --p;
  }
  std::vector<FreeVector> rels;
  for (const auto& c : cols) {
    FreeVector v = p == 0 ? FreeVector(sig, 0) : FreeVector::from_polynomials(sig, c);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  if (p > 0) rels = prune_generators(std::move(rels), p, ring.ideal());
  return FPModule(m.ring(), p, std::move(rels));
}

FPModule syzygy_module(const FPModule& m) {
  const FPModule& min = m.minimal();
  if (min.relations().empty()) return FPModule::zero(m.ring());
  return minimal_presentation(submodule_presentation(m.ring(), min.relations()));
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  if (a.ring() != b.ring()) throw SignatureMismatch("direct sum of modules over different rings");
  const std::size_t p = a.rank() + b.rank();
  std::vector<FreeVector> rels;
  for (const auto& r : a.relations()) rels.push_back(r.embedded(p, 0));
  for (const auto& r : b.relations()) rels.push_back(r.embedded(p, a.rank()));
  return FPModule(a.ring(), p, std::move(rels));
}

FPModule base_change(const FPModule& m, const RingPtr& target) {
  if (!same_signature(m.signature(), target->signature()))
    throw SignatureMismatch("base change needs the same variables");
  for (const auto& g : m.ring()->ideal().polynomials())
    if (!target->reduce(g).is_zero())
      throw std::invalid_argument("target ring is not a quotient of the base ring");
  return FPModule(target, m.rank(), m.relations());
}

FPModule dual_module(const FPModule& m) {
  const RingPtr& ring = m.ring();
  if (!ring->gorenstein())
    throw HypothesisError("Gorenstein ring", ring->describe() + " is not Gorenstein");
  if (!is_cohen_macaulay_module(m))
    throw HypothesisError("maximal Cohen-Macaulay module", m.describe() + " is not MCM");
  const FPModule& min = m.minimal();
  const std::size_t p = min.rank(), q = min.relations().size();
  if (q == 0) return FPModule::free(ring, p);
  std::vector<FreeVector> rows;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Polynomial> entries;
    for (std::size_t j = 0; j < q; ++j) entries.push_back(min.entry(i, j));
    rows.push_back(FreeVector::from_polynomials(m.signature(), entries));
  }
  const auto kernel = syzygy_matrix(rows, q, ring->ideal()).syzygies;
  return minimal_presentation(submodule_presentation(ring, kernel));
}

std::size_t cokernel_length(const std::vector<FreeVector>& columns, std::size_t p,
                            const FiniteLengthModule& target) {
  const std::size_t L = target.length();
  if (L == 0 || p == 0) return 0;
  SparseMatrix span(target.field(), columns.size() * L, p * L);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto entries = columns[j].entries();
    for (std::size_t r = 0; r < p; ++r) {
      if (entries[r].is_zero()) continue;
      const auto acting = target.action(entries[r]);
      for (std::size_t k = 0; k < L; ++k)
        for (const auto& [i, c] : acting[k]) span.add(j * L + k, r * L + i, c);
    }
  }
  return p * L - span.rank();
}

FiniteLengthModule as_finite_length(const FPModule& m) {
  return cokernel_over_algebra(m.relations(), m.rank(), artinian_ring_module(*m.ring()));
}

std::size_t module_truncation_length(const FPModule& m, const Ideal& ideal, int n) {
  ideal.require_mprimary();
  if (n < 0) return 0;
  return cokernel_length(m.relations(), m.rank(), truncation_algebra(ideal, n + 1));
}

GradedHilbert graded_hilbert(const FPModule& m) {
  const QuotientRing& ring = *m.ring();
  if (!ring.graded()) throw HypothesisError("graded ring", ring.describe() + " is not graded");
  const auto degrees = m.generator_degrees();
  if (!degrees) throw HypothesisError("graded presentation", m.describe() + " is not graded");
  GradedHilbert out;
  const std::size_t p = m.rank(), n = ring.nvars();
  if (p == 0) {
    out.numerator = {0};
    return out;
  }
  std::vector<FreeVector> gens = m.relations();
  for (auto& g : ideal_block(ring.ideal(), p)) gens.push_back(std::move(g));
  const GroebnerBasis gb = module_groebner(gens, m.signature(), p);
  std::vector<std::vector<Monomial>> leads(p);
  for (const auto& g : gb.elements()) leads[g.leading_term().comp].push_back(g.leading_term().mono);
  const int lowest = *std::min_element(degrees->begin(), degrees->end());
  std::vector<long long> k;
  for (std::size_t i = 0; i < p; ++i) {
    const auto part = monomial_hilbert_numerator(leads[i], n);
    const std::size_t shift = static_cast<std::size_t>((*degrees)[i] - lowest);
    if (k.size() < part.size() + shift) k.resize(part.size() + shift, 0);
    for (std::size_t j = 0; j < part.size(); ++j) k[j + shift] += part[j];
  }
  for (std::size_t s = 0; s < n - static_cast<std::size_t>(ring.dimension()); ++s)
    k = divide_by_one_minus_t(k);
  while (k.size() > 1 && k.back() == 0) k.pop_back();
  out.numerator = k;
  for (long long c : k) out.multiplicity += c;
  return out;
}

bool is_cohen_macaulay_module(const FPModule& m, std::uint64_t seed) {
  const QuotientRing& ring = *m.ring();
  ring.require_supported("Cohen-Macaulay test");
  if (ring.artinian()) return true;
  const long long e0 = graded_hilbert(m).multiplicity;
  // l(M/theta M) >= e_0(M) with equality exactly for MCM modules; three
  // independent draws must agree.
  Rng rng(seed ^ 0xbb67ae8584caa73bULL);
  std::optional<bool> verdict;
  for (int draw = 0; draw < 3; ++draw) {
    const auto algebra = std::make_shared<const ArtinianAlgebra>(system_of_parameters(ring, rng));
    const std::size_t length =
        cokernel_length(m.relations(), m.rank(), FiniteLengthModule::from_algebra(algebra));
    const bool ok = static_cast<long long>(length) == e0;
    if (verdict && *verdict != ok) throw std::logic_error("Cohen-Macaulay draws disagree");
    verdict = ok;
  }
  return *verdict;
}

}  // namespace dualhs
