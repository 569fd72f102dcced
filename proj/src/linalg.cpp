#include "dualhs/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dualhs {

Vector zero_vector(const Field& field, std::size_t size) {
  return Vector(size, Scalar::zero(field));
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec sparse_combine(SparseVec entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec sparse_apply(const std::vector<SparseVec>& columns, const SparseVec& v) {
  SparseVec acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, a] : columns[j]) acc.emplace_back(i, a * c);
  return sparse_combine(std::move(acc));
}

SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Vector to_dense(const Field& field, const SparseVec& v, std::size_t size) {
  Vector out = zero_vector(field, size);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!other.entries_[k].is_zero()) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::scale(const Scalar& s) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// Sparse elimination kernels, specialised per field representation.

namespace {

struct PrimeOps {
  using Value = std::uint32_t;
  std::uint32_t p;
  Field field;

  Value from(const Scalar& s) const { return s.residue(); }
  Scalar to(const Value& v) const { return Scalar::from_int(field, static_cast<long long>(v)); }
  bool is_zero(const Value& v) const { return v == 0; }
  Value mul(const Value& a, const Value& b) const {
    return static_cast<Value>(static_cast<std::uint64_t>(a) * b % p);
  }
  // a - f*b
  Value sub_mul(const Value& a, const Value& f, const Value& b) const {
    const Value fb = mul(f, b);
    return a >= fb ? a - fb : a + p - fb;
  }
  Value neg_mul(const Value& f, const Value& b) const {
    const Value fb = mul(f, b);
    return fb == 0 ? 0 : p - fb;
  }
  Value inv(const Value& a) const {
    std::uint64_t result = 1, base = a, exp = p - 2;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<Value>(result);
  }
};

struct RationalOps {
  using Value = mpq_class;

  Value from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Value& v) const { return Scalar::from_rational(Field::rationals(), v); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
  Value neg_mul(const Value& f, const Value& b) const { return -(f * b); }
  Value inv(const Value& a) const { return 1 / a; }
};

template <class Ops>
class Eliminator {
 public:
  using V = typename Ops::Value;
  using Row = std::vector<std::pair<std::size_t, V>>;

  Eliminator(Ops ops, std::size_t cols) : ops_(ops), cols_(cols) {}

  Row convert(const std::vector<SparseMatrix::Entry>& entries) const {
    Row row;
    row.reserve(entries.size());
    for (const auto& [c, s] : entries) {
      V v = ops_.from(s);
      if (!ops_.is_zero(v)) row.emplace_back(c, std::move(v));
    }
    return row;
  }

  // a - f * b, both sorted by column.
  Row axpy(const Row& a, const V& f, const Row& b) const {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, ops_.neg_mul(f, b[j].second));
        ++j;
      } else {
        V v = ops_.sub_mul(a[i].second, f, b[j].second);
        if (!ops_.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static const V* find(const Row& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
  }

  void normalize(Row& row, std::size_t col) const {
    const V inv = ops_.inv(*find(row, col));
    for (auto& e : row) e.second = ops_.mul(e.second, inv);
  }

  /// Rank with sparsest-row pivoting; rows are consumed.
  std::size_t rank(std::vector<Row> rows) const {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty()) active.push_back(i);
    std::size_t rank = 0;
    while (!active.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < active.size(); ++k)
        if (rows[active[k]].size() < rows[active[best]].size()) best = k;
      const std::size_t prow = active[best];
      active[best] = active.back();
      active.pop_back();
      if (rows[prow].empty()) continue;
      ++rank;
      const std::size_t pcol = rows[prow].front().first;
      normalize(rows[prow], pcol);
      std::vector<std::size_t> next;
      next.reserve(active.size());
      for (std::size_t r : active) {
        if (const V* v = find(rows[r], pcol)) {
          const V f = *v;
          rows[r] = axpy(rows[r], f, rows[prow]);
        }
        if (!rows[r].empty()) next.push_back(r);
      }
      active.swap(next);
      Row().swap(rows[prow]);
    }
    return rank;
  }

  /// Fully reduced row echelon form; returns normalized pivot rows in
  /// ascending pivot-column order.
  std::vector<Row> rref(std::vector<Row> rows, std::vector<std::size_t>& pivots) const {
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty()) remaining.push_back(i);
    std::vector<Row> result;
    pivots.clear();
    while (!remaining.empty()) {
      // Leading column of the remaining block.
      std::size_t col = std::numeric_limits<std::size_t>::max();
      for (std::size_t r : remaining) col = std::min(col, rows[r].front().first);
      std::size_t best = remaining.size();
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        const Row& row = rows[remaining[k]];
        if (row.front().first != col) continue;
        if (best == remaining.size() || row.size() < rows[remaining[best]].size()) best = k;
      }
      const std::size_t prow = remaining[best];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
      Row pivot = std::move(rows[prow]);
      normalize(pivot, col);
      std::vector<std::size_t> next;
      next.reserve(remaining.size());
      for (std::size_t r : remaining) {
        if (rows[r].front().first == col) {
          const V f = rows[r].front().second;
          rows[r] = axpy(rows[r], f, pivot);
        }
        if (!rows[r].empty()) next.push_back(r);
      }
      remaining.swap(next);
      for (Row& done : result) {
        if (const V* v = find(done, col)) {
          const V f = *v;
          done = axpy(done, f, pivot);
        }
      }
      result.push_back(std::move(pivot));
      pivots.push_back(col);
    }
    return result;
  }

  const Ops& ops() const { return ops_; }

 private:
  Ops ops_;
  std::size_t cols_;
};

template <class Fn>
decltype(auto) with_ops(const Field& field, std::size_t cols, Fn&& fn) {
  if (field.is_rational()) return fn(Eliminator<RationalOps>(RationalOps{}, cols));
  return fn(Eliminator<PrimeOps>(PrimeOps{field.characteristic(), field}, cols));
}

std::vector<std::vector<SparseMatrix::Entry>> dense_rows(const Matrix& a) {
  std::vector<std::vector<SparseMatrix::Entry>> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) rows[i].emplace_back(j, a(i, j));
  return rows;
}

struct SparseRref {
  std::vector<std::vector<SparseMatrix::Entry>> rows;
  std::vector<std::size_t> pivots;
};

SparseRref sparse_rref(const Field& field, std::size_t cols,
                       const std::vector<std::vector<SparseMatrix::Entry>>& input) {
  return with_ops(field, cols, [&](auto engine) {
    using Engine = decltype(engine);
    std::vector<typename Engine::Row> rows;
    rows.reserve(input.size());
    for (const auto& r : input) rows.push_back(engine.convert(r));
    SparseRref out;
    auto reduced = engine.rref(std::move(rows), out.pivots);
    for (const auto& row : reduced) {
      std::vector<SparseMatrix::Entry> entries;
      entries.reserve(row.size());
      for (const auto& [c, v] : row) entries.emplace_back(c, engine.ops().to(v));
      out.rows.push_back(std::move(entries));
    }
    return out;
  });
}

std::size_t sparse_rank(const Field& field, std::size_t cols,
                        const std::vector<std::vector<SparseMatrix::Entry>>& input) {
  return with_ops(field, cols, [&](auto engine) {
    using Engine = decltype(engine);
    std::vector<typename Engine::Row> rows;
    rows.reserve(input.size());
    for (const auto& r : input) rows.push_back(engine.convert(r));
    return engine.rank(std::move(rows));
  });
}

std::vector<Vector> kernel_from_rref(const Field& field, std::size_t cols,
                                     const SparseRref& r) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(field, cols);
    v[f] = Scalar::one(field);
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      for (const auto& [c, s] : r.rows[k]) {
        if (c == f) {
          v[r.pivots[k]] = -s;
          break;
        }
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dense interface

RrefResult mat_rref(const Matrix& a) {
  SparseRref r = sparse_rref(a.field(), a.cols(), dense_rows(a));
  RrefResult out{Matrix(a.field(), a.rows(), a.cols()), r.pivots.size(), r.pivots};
  for (std::size_t k = 0; k < r.rows.size(); ++k)
    for (const auto& [c, s] : r.rows[k]) out.reduced(k, c) = s;
  return out;
}

std::size_t mat_rank(const Matrix& a) { return sparse_rank(a.field(), a.cols(), dense_rows(a)); }

std::vector<Vector> mat_kernel(const Matrix& a) {
  return kernel_from_rref(a.field(), a.cols(), sparse_rref(a.field(), a.cols(), dense_rows(a)));
}

std::optional<Vector> mat_solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  // Reduce the augmented system [A | b].
  auto rows = dense_rows(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!b[i].is_zero()) rows[i].emplace_back(a.cols(), b[i]);
  SparseRref r = sparse_rref(a.field(), a.cols() + 1, rows);
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    if (r.pivots[k] == a.cols()) return std::nullopt;
    const auto& row = r.rows[k];
    if (!row.empty() && row.back().first == a.cols()) x[r.pivots[k]] = row.back().second;
  }
  return x;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("sparse matrix index");
  if (value.is_zero()) return;
  data_[row].emplace_back(col, value);
}

std::vector<std::vector<SparseMatrix::Entry>> SparseMatrix::normalized_rows() const {
  std::vector<std::vector<Entry>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto entries = data_[i];
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    auto& out = rows[i];
    for (auto& e : entries) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
        if (out.back().second.is_zero()) out.pop_back();
      } else {
        out.push_back(std::move(e));
      }
    }
  }
  return rows;
}

std::size_t SparseMatrix::rank() const { return sparse_rank(field_, cols_, normalized_rows()); }

std::vector<Vector> SparseMatrix::kernel() const {
  return kernel_from_rref(field_, cols_, sparse_rref(field_, cols_, normalized_rows()));
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, s] : data_[i]) m(i, c) += s;
  return m;
}

std::size_t span_rank(const Field& field, std::size_t length,
                      const std::vector<Vector>& vectors) {
  std::vector<std::vector<SparseMatrix::Entry>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != length) throw std::invalid_argument("span_rank: length mismatch");
    std::vector<SparseMatrix::Entry> row;
    for (std::size_t j = 0; j < length; ++j)
      if (!v[j].is_zero()) row.emplace_back(j, v[j]);
    rows.push_back(std::move(row));
  }
  return sparse_rank(field, length, rows);
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(const Field& field, std::size_t length,
                           const std::vector<Vector>& spanning)
    : field_(field), length_(length) {
  std::vector<std::vector<SparseMatrix::Entry>> rows;
  rows.reserve(spanning.size());
  for (const auto& v : spanning) {
    if (v.size() != length) throw std::invalid_argument("EchelonBasis: length mismatch");
    std::vector<SparseMatrix::Entry> row;
    for (std::size_t j = 0; j < length; ++j)
      if (!v[j].is_zero()) row.emplace_back(j, v[j]);
    rows.push_back(std::move(row));
  }
  SparseRref r = sparse_rref(field, length, rows);
  pivots_ = r.pivots;
  for (const auto& row : r.rows) {
    Vector v = zero_vector(field, length);
    for (const auto& [c, s] : row) v[c] = s;
    basis_.push_back(std::move(v));
  }
}

Vector EchelonBasis::reduce(const Vector& v) const {
  Vector out = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = out[pivots_[k]];
    if (f.is_zero()) continue;
    const Vector& b = basis_[k];
    for (std::size_t j = 0; j < length_; ++j)
      if (!b[j].is_zero()) out[j] -= f * b[j];
  }
  return out;
}

Vector EchelonBasis::coordinates(const Vector& v) const {
  Vector c;
  c.reserve(basis_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<bool> is_pivot(length_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < length_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace dualhs
