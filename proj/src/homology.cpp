#include "dualhs/homology.hpp"

#include <stdexcept>

namespace dualhs {

namespace {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// phi -> phi o A as a map N^src -> N^tgt, where A has tgt columns of rank
// src: (v_r) -> (sum_r a_rj v_r)_j. Rows index N^tgt, columns N^src.
std::vector<Triplet> hom_map(const std::vector<FreeVector>& columns, std::size_t src,
                             const FiniteLengthModule& n, ActionRoute route) {
  const std::size_t L = n.length();
  std::vector<Triplet> out;
  if (L == 0) return out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto entries = columns[j].entries();
    for (std::size_t r = 0; r < src; ++r) {
      if (entries[r].is_zero()) continue;
      const auto acting = n.action(entries[r], route);
      for (std::size_t k = 0; k < L; ++k)
        for (const auto& [b, c] : acting[k]) out.push_back({j * L + b, r * L + k, c});
    }
  }
  return out;
}

SparseMatrix as_matrix(const std::vector<Triplet>& ts, const Field& field, std::size_t rows,
                       std::size_t cols) {
  SparseMatrix m(field, rows, cols);
  for (const auto& t : ts) m.add(t.row, t.col, t.value);
  return m;
}

std::size_t map_rank(const std::vector<FreeVector>& columns, std::size_t src,
                     const FiniteLengthModule& n, ActionRoute route) {
  const std::size_t L = n.length();
  if (L == 0 || columns.empty() || src == 0) return 0;
  return as_matrix(hom_map(columns, src, n, route), n.field(), columns.size() * L, src * L).rank();
}

void check_rings(const FPModule& m, const FiniteLengthModule& n) {
  if (!same_signature(m.signature(), n.signature()))
    throw SignatureMismatch("module and target live over different rings");
}

}  // namespace

HomSpace hom_space(const FPModule& m, const FiniteLengthModule& n, ActionRoute route) {
  check_rings(m, n);
  const std::size_t L = n.length(), p = m.rank();
  HomSpace out;
  if (L == 0 || p == 0) return out;
  const SparseMatrix d = as_matrix(hom_map(m.relations(), p, n, route), n.field(),
                                   m.relations().size() * L, p * L);
  out.basis = d.kernel();
  out.dimension = out.basis.size();
  return out;
}

std::size_t hom_length(const FPModule& m, const FiniteLengthModule& n, ActionRoute route) {
  check_rings(m, n);
  return m.rank() * n.length() - map_rank(m.relations(), m.rank(), n, route);
}

std::size_t ext_length(std::size_t i, const FPModule& m, const FiniteLengthModule& n,
                       ActionRoute route) {
  check_rings(m, n);
  if (i == 0) return hom_length(m, n, route);
  const std::size_t L = n.length();
  if (L == 0) return 0;
  const Resolution res = m.resolution(i + 1);
  const std::size_t incoming = map_rank(res.maps[i - 1], res.ranks[i - 1], n, route);
  const std::size_t outgoing = map_rank(res.maps[i], res.ranks[i], n, route);
  return res.ranks[i] * L - outgoing - incoming;
}

std::size_t dual_hs_value(const FPModule& m, const Ideal& ideal, int n, ActionRoute route) {
  if (!ideal.ring()->gorenstein())
    throw HypothesisError("Gorenstein ring", ideal.ring()->describe() + " is not Gorenstein");
  if (n < 0) return 0;
  return hom_length(m, truncation_algebra(ideal, n + 1), route);
}

std::size_t ext_dual_value(std::size_t i, const FPModule& m, const Ideal& ideal, int n,
                           ActionRoute route) {
  if (!ideal.ring()->gorenstein())
    throw HypothesisError("Gorenstein ring", ideal.ring()->describe() + " is not Gorenstein");
  if (n < 0) return 0;
  return ext_length(i, m, truncation_algebra(ideal, n + 1), route);
}

bool ext_map_injective(std::size_t i, const FPModule& m, const FiniteLengthModule& source,
                       const FiniteLengthModule& target, const std::vector<SparseVec>& phi) {
  check_rings(m, source);
  check_rings(m, target);
  const std::size_t L = source.length(), T = target.length();
  if (L == 0) return true;
  if (phi.size() != L) throw std::invalid_argument("map does not match the source module");
  const Resolution res = m.resolution(i + 1);
  const std::size_t ri = res.ranks[i];
  if (ri == 0) return true;

  // Cocycles Z in source^ri; boundaries B and B' of source and target.
  const SparseMatrix out_map = as_matrix(hom_map(res.maps[i], ri, source, ActionRoute::normal_form),
                                         source.field(), res.maps[i].size() * L, ri * L);
  const std::vector<Vector> cocycles = out_map.kernel();
  std::size_t boundary = 0;
  std::vector<Triplet> target_boundary;
  if (i > 0) {
    boundary = map_rank(res.maps[i - 1], res.ranks[i - 1], source, ActionRoute::normal_form);
    target_boundary = hom_map(res.maps[i - 1], res.ranks[i - 1], target, ActionRoute::normal_form);
  }
  // Rows: images of the target boundary generators, then phi(z) for z in Z.
  const std::size_t prior = i > 0 ? res.ranks[i - 1] * T : 0;
  SparseMatrix image_b(target.field(), prior, ri * T);
  SparseMatrix stacked(target.field(), prior + cocycles.size(), ri * T);
  for (const auto& t : target_boundary) {
    image_b.add(t.col, t.row, t.value);
    stacked.add(t.col, t.row, t.value);
  }
  for (std::size_t z = 0; z < cocycles.size(); ++z)
    for (std::size_t r = 0; r < ri; ++r) {
      SparseVec block;
      for (std::size_t k = 0; k < L; ++k)
        if (!cocycles[z][r * L + k].is_zero()) block.emplace_back(k, cocycles[z][r * L + k]);
      for (const auto& [b, c] : sparse_apply(phi, block)) stacked.add(prior + z, r * T + b, c);
    }
  const std::size_t rank_b = image_b.rank();
  const std::size_t kernel = cocycles.size() - (stacked.rank() - rank_b);
  return kernel == boundary;
}

std::vector<SparseVec> multiplication_map(const Ideal& ideal, int n, const Polynomial& x) {
  if (n <= 0) return {};
  const AlgebraPtr source = ideal.truncation(n);
  const AlgebraPtr target = ideal.truncation(n + 1);
  std::vector<SparseVec> out;
  for (const auto& b : source->basis())
    out.push_back(target->coordinates(x * Polynomial::monomial(x.signature(), Scalar::one(x.field()), b)));
  return out;
}

FiniteLengthModule maximal_power(const RingPtr& ring, int i) {
  const FiniteLengthModule whole = artinian_ring_module(*ring);
  if (i <= 0) return whole;
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(ring->variable(v));
  const AlgebraPtr& algebra = whole.algebra();
  std::vector<Vector> span;
  for (const auto& g : ideal_power(vars, i, ring->signature()))
    for (std::size_t k = 0; k < algebra->dim(); ++k) {
      const SparseVec v = algebra->multiply(g, k);
      if (!v.empty()) span.push_back(to_dense(ring->field(), v, algebra->dim()));
    }
  return whole.submodule(span);
}

std::size_t bass_mu1(const RingPtr& ring, int i) {
  if (i < 1) throw std::invalid_argument("Bass number index must be at least 1");
  return ext_length(1, FPModule::residue_field(ring), maximal_power(ring, i));
}

}  // namespace dualhs
