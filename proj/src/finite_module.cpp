#include "dualhs/finite_module.hpp"

#include <stdexcept>
#include <unordered_map>

namespace dualhs {

struct FiniteLengthModule::Cache {
  std::mutex mutex;
  std::unordered_map<Monomial, std::vector<SparseVec>, MonomialHash> sparse;
  std::unordered_map<Monomial, Matrix, MonomialHash> dense;
};

namespace {

using OperatorTable = std::vector<std::vector<SparseVec>>;

std::vector<SparseVec> identity_columns(const Field& field, std::size_t dim) {
  std::vector<SparseVec> out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k].emplace_back(k, Scalar::one(field));
  return out;
}

SparseVec column_of(const Matrix& m, std::size_t k) {
  SparseVec out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, k).is_zero()) out.emplace_back(r, m(r, k));
  return out;
}

}  // namespace

FiniteLengthModule::FiniteLengthModule(SigPtr sig, std::size_t dim)
    : sig_(std::move(sig)), dim_(dim), cache_(std::make_shared<Cache>()) {}

FiniteLengthModule FiniteLengthModule::zero(const SigPtr& sig) {
  FiniteLengthModule out(sig, 0);
  out.ops_ = std::make_shared<const OperatorTable>(sig->nvars());
  return out;
}

FiniteLengthModule FiniteLengthModule::from_algebra(AlgebraPtr algebra) {
  FiniteLengthModule out(algebra->signature(), algebra->dim());
  out.ops_ = std::shared_ptr<const OperatorTable>(algebra, &algebra->multiplication_table());
  for (const auto& m : algebra->basis()) out.labels_.push_back(m.to_string(*algebra->signature()));
  out.algebra_ = std::move(algebra);
  return out;
}

FiniteLengthModule FiniteLengthModule::from_operators(const SigPtr& sig,
                                                      const std::vector<Matrix>& ops,
                                                      std::vector<std::string> labels) {
  if (ops.size() != sig->nvars())
    throw std::invalid_argument("one operator per variable is required");
  const std::size_t dim = ops.empty() ? labels.size() : ops[0].rows();
  OperatorTable table(ops.size(), std::vector<SparseVec>(dim));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != dim || ops[i].cols() != dim || !(ops[i].field() == sig->field()))
      throw std::invalid_argument("operator shape or field mismatch");
    for (std::size_t k = 0; k < dim; ++k) table[i][k] = column_of(ops[i], k);
  }
  FiniteLengthModule out(sig, dim);
  out.ops_ = std::make_shared<const OperatorTable>(std::move(table));
  if (labels.size() != dim) {
    labels.clear();
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("e" + std::to_string(k));
  }
  out.labels_ = std::move(labels);
  return out;
}

Matrix FiniteLengthModule::dense_operator(std::size_t i) const {
  Matrix out(field(), dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (const auto& [r, c] : (*ops_)[i][k]) out(r, k) = c;
  return out;
}

const std::vector<SparseVec>& FiniteLengthModule::monomial_action(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->sparse.find(m);
    if (it != cache_->sparse.end()) return it->second;
  }
  std::vector<SparseVec> cols;
  if (m.is_one()) {
    cols = identity_columns(field(), dim_);
  } else {
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    const auto& prev = monomial_action(m.quotient(Monomial::variable(i)));
    cols.resize(dim_);
    for (std::size_t k = 0; k < dim_; ++k) cols[k] = sparse_apply((*ops_)[i], prev[k]);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->sparse.emplace(m, std::move(cols)).first->second;
}

std::vector<SparseVec> FiniteLengthModule::action(const Polynomial& f, ActionRoute route) const {
  std::vector<SparseVec> out(dim_);
  if (dim_ == 0 || f.is_zero()) return out;
  if (route == ActionRoute::normal_form && algebra_) {
    for (std::size_t k = 0; k < dim_; ++k) out[k] = algebra_->multiply(f, k);
    return out;
  }
  if (route == ActionRoute::dense_table) {
    // Evaluate f at the dense operator matrices; monomial powers are memoized.
    Matrix total(field(), dim_, dim_);
    for (const auto& t : f.terms()) {
      const Matrix* power = nullptr;
      {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->dense.find(t.mono);
        if (it != cache_->dense.end()) power = &it->second;
      }
      if (!power) {
        Matrix p = Matrix::identity(field(), dim_);
        for (std::size_t i = 0; i < sig_->nvars(); ++i)
          for (std::uint32_t e = 0; e < t.mono[i]; ++e) p = dense_operator(i) * p;
        std::lock_guard<std::mutex> lock(cache_->mutex);
        power = &cache_->dense.emplace(t.mono, std::move(p)).first->second;
      }
      Matrix term = *power;
      total += term.scale(t.coeff);
    }
    for (std::size_t k = 0; k < dim_; ++k) out[k] = column_of(total, k);
    return out;
  }
  std::vector<SparseVec> acc(dim_);
  for (const auto& t : f.terms()) {
    const auto& cols = monomial_action(t.mono);
    for (std::size_t k = 0; k < dim_; ++k)
      for (const auto& [r, c] : cols[k]) acc[k].emplace_back(r, c * t.coeff);
  }
  for (std::size_t k = 0; k < dim_; ++k) out[k] = sparse_combine(std::move(acc[k]));
  return out;
}

SparseVec FiniteLengthModule::act(const Polynomial& f, const SparseVec& v) const {
  SparseVec acc;
  for (const auto& t : f.terms()) {
    SparseVec w = v;
    for (std::size_t i = 0; i < sig_->nvars(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) w = sparse_apply((*ops_)[i], w);
    for (auto& [r, c] : w) acc.emplace_back(r, c * t.coeff);
  }
  return sparse_combine(std::move(acc));
}

FiniteLengthModule FiniteLengthModule::submodule(const std::vector<Vector>& span) const {
  const EchelonBasis eb(field(), dim_, span);
  const std::size_t r = eb.dimension();
  OperatorTable table(sig_->nvars(), std::vector<SparseVec>(r));
  for (std::size_t i = 0; i < sig_->nvars(); ++i)
    for (std::size_t k = 0; k < r; ++k) {
      const Vector image = to_dense(field(), sparse_apply((*ops_)[i], to_sparse(eb.basis()[k])), dim_);
      if (!eb.contains(image)) throw std::logic_error("subspace is not stable under the action");
      table[i][k] = to_sparse(eb.coordinates(image));
    }
  FiniteLengthModule out(sig_, r);
  out.ops_ = std::make_shared<const OperatorTable>(std::move(table));
  for (std::size_t k = 0; k < r; ++k) out.labels_.push_back("u" + std::to_string(k));
  return out;
}

FiniteLengthModule FiniteLengthModule::quotient(const std::vector<Vector>& span) const {
  const EchelonBasis eb(field(), dim_, span);
  const auto free = eb.free_columns();
  std::vector<std::int64_t> position(dim_, -1);
  for (std::size_t k = 0; k < free.size(); ++k) position[free[k]] = static_cast<std::int64_t>(k);
  OperatorTable table(sig_->nvars(), std::vector<SparseVec>(free.size()));
  for (std::size_t i = 0; i < sig_->nvars(); ++i)
    for (std::size_t k = 0; k < free.size(); ++k) {
      const Vector image = eb.reduce(to_dense(field(), (*ops_)[i][free[k]], dim_));
      SparseVec coords;
      for (std::size_t c = 0; c < dim_; ++c)
        if (!image[c].is_zero()) coords.emplace_back(static_cast<std::uint32_t>(position[c]), image[c]);
      table[i][k] = std::move(coords);
    }
  FiniteLengthModule out(sig_, free.size());
  out.ops_ = std::make_shared<const OperatorTable>(std::move(table));
  for (std::size_t c : free)
    out.labels_.push_back(c < labels_.size() ? labels_[c] : "e" + std::to_string(c));
  return out;
}

FiniteLengthModule FiniteLengthModule::direct_sum(const FiniteLengthModule& a,
                                                  const FiniteLengthModule& b) {
  if (!same_signature(a.sig_, b.sig_)) throw SignatureMismatch("direct sum across rings");
  const std::size_t dim = a.dim_ + b.dim_;
  OperatorTable table(a.sig_->nvars(), std::vector<SparseVec>(dim));
  for (std::size_t i = 0; i < a.sig_->nvars(); ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) table[i][k] = (*a.ops_)[i][k];
    for (std::size_t k = 0; k < b.dim_; ++k) {
      SparseVec shifted = (*b.ops_)[i][k];
      for (auto& entry : shifted) entry.first += static_cast<std::uint32_t>(a.dim_);
      table[i][a.dim_ + k] = std::move(shifted);
    }
  }
  FiniteLengthModule out(a.sig_, dim);
  out.ops_ = std::make_shared<const OperatorTable>(std::move(table));
  for (std::size_t k = 0; k < a.dim_; ++k)
    out.labels_.push_back("0:" + (k < a.labels_.size() ? a.labels_[k] : std::to_string(k)));
  for (std::size_t k = 0; k < b.dim_; ++k)
    out.labels_.push_back("1:" + (k < b.labels_.size() ? b.labels_[k] : std::to_string(k)));
  return out;
}

bool FiniteLengthModule::operators_commute() const {
  const std::size_t n = sig_->nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sparse_apply((*ops_)[i], (*ops_)[j][k]) != sparse_apply((*ops_)[j], (*ops_)[i][k]))
          return false;
  return true;
}

bool FiniteLengthModule::operators_nilpotent() const {
  for (std::size_t i = 0; i < sig_->nvars(); ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      SparseVec v{{static_cast<std::uint32_t>(k), Scalar::one(field())}};
      for (std::size_t step = 0; step < dim_ && !v.empty(); ++step) v = sparse_apply((*ops_)[i], v);
      if (!v.empty()) return false;
    }
  return true;
}

std::size_t FiniteLengthModule::socle_dimension() const {
  const std::size_t n = sig_->nvars();
  SparseMatrix stacked(field(), n * dim_, dim_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < dim_; ++k)
      for (const auto& [r, c] : (*ops_)[i][k]) stacked.add(i * dim_ + r, k, c);
  return dim_ - stacked.rank();
}

FiniteLengthModule truncation_algebra(const Ideal& ideal, int n) {
  if (n <= 0) return FiniteLengthModule::zero(ideal.ring()->signature());
  return FiniteLengthModule::from_algebra(ideal.truncation(n));
}

FiniteLengthModule artinian_ring_module(const QuotientRing& ring) {
  if (!ring.artinian())
    throw HypothesisError("local Artinian ring", ring.describe() + " is not local Artinian");
  return FiniteLengthModule::from_algebra(std::make_shared<const ArtinianAlgebra>(ring.ideal()));
}

FiniteLengthModule graded_piece(const Ideal& ideal, int n) {
  const FiniteLengthModule whole = truncation_algebra(ideal, n + 1);
  if (n <= 0) return whole;
  const AlgebraPtr& algebra = whole.algebra();
  std::vector<Vector> span;
  for (const auto& g : ideal.power_basis(n).polynomials())
    for (std::size_t k = 0; k < algebra->dim(); ++k) {
      SparseVec v = algebra->multiply(g, k);
      if (!v.empty()) span.push_back(to_dense(whole.field(), v, algebra->dim()));
    }
  return whole.submodule(span);
}

FiniteLengthModule cokernel_over_algebra(const std::vector<FreeVector>& columns, std::size_t p,
                                         const FiniteLengthModule& algebra) {
  const std::size_t L = algebra.length();
  FiniteLengthModule sum = FiniteLengthModule::zero(algebra.signature());
  for (std::size_t r = 0; r < p; ++r) sum = FiniteLengthModule::direct_sum(sum, algebra);
  if (L == 0 || p == 0) return sum;
  std::vector<Vector> span;
  for (const auto& col : columns) {
    const auto entries = col.entries();
    std::vector<std::vector<SparseVec>> acting(p);
    for (std::size_t r = 0; r < p; ++r) acting[r] = algebra.action(entries[r]);
    for (std::size_t k = 0; k < L; ++k) {
      Vector v = zero_vector(algebra.field(), p * L);
      bool nonzero = false;
      for (std::size_t r = 0; r < p; ++r)
        for (const auto& [i, c] : acting[r][k]) {
          v[r * L + i] = c;
          nonzero = true;
        }
      if (nonzero) span.push_back(std::move(v));
    }
  }
  return sum.quotient(span);
}

}  // namespace dualhs
