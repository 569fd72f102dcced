#include <doctest.h>

#include "dualhs/linalg.hpp"

using namespace dualhs;

namespace {

const Field kFields[] = {Field::rationals(), Field::prime(kDefaultPrime)};

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng, int sparsity) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 10) >= sparsity)
        m(i, j) = Scalar::from_int(f, static_cast<long long>(rng() % 7) - 3);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  for (const Field& f : kFields) {
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
      Scalar a = Scalar::random_nonzero(f, rng);
      CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
    }
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
  }
  Scalar q = Scalar::from_rational(Field::rationals(), mpq_class(-6, 4));
  CHECK(q.to_string() == "-3/2");
  Scalar p = Scalar::from_int(Field::prime(7), -1);
  CHECK(p.residue() == 6);
  CHECK(p.to_string() == "-1");
  CHECK(Scalar::from_rational(Field::prime(7), mpq_class(1, 2)).residue() == 4);
  CHECK_THROWS_AS(Scalar::from_rational(Field::prime(7), mpq_class(1, 7)), std::domain_error);
  CHECK_THROWS_AS(Field::prime(32004), std::invalid_argument);
  CHECK(Field::parse("Fp:32003") == Field::prime(32003));
  CHECK(Field::parse("Fp 7") == Field::prime(7));
  CHECK(Field::parse("Q").is_rational());
  CHECK_THROWS(Field::parse("R"));
  CHECK_THROWS_AS(Scalar::one(Field::prime(7)) + Scalar::one(Field::prime(11)), FieldMismatch);
}

TEST_CASE("rref examples") {
  for (const Field& f : kFields) {
    CHECK(mat_rref(Matrix::from_ints(f, {{1, 2}, {2, 4}})).rank == 1);
    const Matrix id = Matrix::identity(f, 3);
    const RrefResult r = mat_rref(id);
    CHECK(r.rank == 3);
    CHECK(r.reduced == id);
    const RrefResult e = mat_rref(Matrix::from_ints(f, {{1, 1, 1}, {0, 1, 1}}));
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 1}}));
  }
}

TEST_CASE("kernel examples") {
  for (const Field& f : kFields) {
    const auto k = mat_kernel(Matrix::from_ints(f, {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{Scalar::from_int(f, -1), Scalar::one(f)});
    CHECK(mat_kernel(Matrix::identity(f, 2)).empty());
    CHECK(mat_kernel(Matrix(f, 2, 3)).size() == 3);
  }
}

TEST_CASE("solve examples") {
  for (const Field& f : kFields) {
    const Vector b{Scalar::from_int(f, 3), Scalar::from_int(f, 5)};
    auto x = mat_solve(Matrix::identity(f, 2), b);
    REQUIRE(x);
    CHECK(*x == b);
    const Matrix a = Matrix::from_ints(f, {{1, 1}});
    auto y = mat_solve(a, {Scalar::from_int(f, 2)});
    REQUIRE(y);
    CHECK(a.apply(*y) == Vector{Scalar::from_int(f, 2)});
    CHECK_FALSE(mat_solve(Matrix::from_ints(f, {{1}, {0}}), {Scalar::zero(f), Scalar::one(f)}));
  }
}

TEST_CASE("rank properties on random matrices") {
  for (const Field& f : kFields) {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      const Matrix a = random_matrix(f, r, c, rng, static_cast<int>(rng() % 8));
      const std::size_t rank = mat_rank(a);
      CHECK(rank == mat_rank(a.transpose()));
      CHECK(rank == mat_rref(a).rank);
      const auto kernel = mat_kernel(a);
      CHECK(rank + kernel.size() == c);
      for (const auto& v : kernel) CHECK(is_zero_vector(a.apply(v)));
      Vector x(c, Scalar::zero(f));
      for (auto& e : x) e = Scalar::from_int(f, static_cast<long long>(rng() % 5));
      const Vector b = a.apply(x);
      auto sol = mat_solve(a, b);
      REQUIRE(sol);
      CHECK(a.apply(*sol) == b);
    }
  }
}

TEST_CASE("integer matrices have equal rank over Q and Fp") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + rng() % 7, c = 2 + rng() % 7;
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& e : row) e = static_cast<long long>(rng() % 9) - 4;
    CHECK(mat_rank(Matrix::from_ints(Field::rationals(), rows)) ==
          mat_rank(Matrix::from_ints(Field::prime(kDefaultPrime), rows)));
  }
}

TEST_CASE("sparse matrix and echelon basis") {
  for (const Field& f : kFields) {
    SparseMatrix s(f, 3, 4);
    s.add(0, 1, Scalar::one(f));
    s.add(0, 1, Scalar::one(f));
    s.add(1, 2, Scalar::from_int(f, 3));
    s.add(2, 1, Scalar::from_int(f, -2));
    s.add(2, 2, Scalar::from_int(f, 3));
    CHECK(s.rank() == 2);
    CHECK(s.kernel().size() == 2);
    CHECK(mat_rank(s.to_dense()) == 2);

    const Vector u{Scalar::one(f), Scalar::one(f), Scalar::zero(f)};
    const Vector v{Scalar::zero(f), Scalar::one(f), Scalar::one(f)};
    EchelonBasis e(f, 3, {u, v, u});
    CHECK(e.dimension() == 2);
    Vector w{Scalar::one(f), Scalar::from_int(f, 2), Scalar::one(f)};
    CHECK(e.contains(w));
    CHECK_FALSE(e.contains(Vector{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)}));
    CHECK(e.free_columns().size() == 1);
    CHECK(span_rank(f, 3, {u, v, w}) == 2);
  }
}
