#include <doctest.h>

#include "dualhs/finite_module.hpp"

using namespace dualhs;

namespace {

const Field kFields[] = {Field::rationals(), Field::prime(kDefaultPrime)};

RingPtr ring(const std::vector<std::string>& vars, const std::string& rels, const Field& f) {
  const auto sig = RingSignature::make(vars, f);
  return QuotientRing::make(sig, parse_poly_list(rels, sig));
}

std::vector<std::string> labels(const FiniteLengthModule& m) { return m.labels(); }

}  // namespace

TEST_CASE("quotient ring invariants") {
  for (const Field& f : kFields) {
    const auto poly = ring({"x", "y"}, "", f);
    CHECK(poly->dimension() == 2);
    CHECK(poly->graded());
    CHECK(poly->gorenstein());
    CHECK(poly->multiplicity() == 1);

    const auto quad = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    CHECK(quad->dimension() == 1);
    CHECK(quad->graded());
    CHECK(quad->gorenstein());
    CHECK(quad->multiplicity() == 2);
    CHECK(quad->hilbert_numerator() == std::vector<long long>{1, 1});

    const auto ci = ring({"x", "y"}, "x^2, y^2", f);
    CHECK(ci->dimension() == 0);
    CHECK(ci->artinian());
    CHECK(ci->gorenstein());
    CHECK(ci->multiplicity() == 4);

    const auto bad = ring({"x", "y"}, "x^2, x*y", f);
    CHECK(bad->dimension() == 1);
    CHECK_FALSE(bad->cohen_macaulay());
    CHECK_FALSE(bad->gorenstein());

    const auto surface = ring({"x", "y", "z"}, "x^2 + y^2 + z^2", f);
    CHECK(surface->dimension() == 2);
    CHECK(surface->gorenstein());
    CHECK(surface->multiplicity() == 2);

    const auto nonlocal = ring({"x"}, "x^2 - x", f);
    CHECK(nonlocal->regime() == QuotientRing::Regime::unsupported);
    CHECK_THROWS_AS(nonlocal->require_supported("test"), HypothesisError);
  }
  const auto sig = RingSignature::make({"x"}, Field::rationals());
  CHECK_THROWS(QuotientRing::make(sig, parse_poly_list("x, x + 1", sig)));
}

TEST_CASE("m-primary ideals") {
  for (const Field& f : kFields) {
    const auto poly = ring({"x", "y"}, "", f);
    CHECK(is_mprimary(poly, parse_poly_list("x, y", poly->signature())));
    CHECK_FALSE(is_mprimary(poly, parse_poly_list("x", poly->signature())));
    CHECK_FALSE(is_mprimary(poly, parse_poly_list("x - 1, y", poly->signature())));
    const auto quad = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    CHECK(is_mprimary(quad, parse_poly_list("x", quad->signature())));
    const Ideal x(quad, parse_poly_list("x", quad->signature()));
    CHECK(x.power_basis(1).contains(parse_poly("y^3", quad->signature())));
    CHECK_FALSE(x.is_maximal_ideal());
    CHECK(maximal_ideal(quad)->is_maximal_ideal());
  }
}

TEST_CASE("truncation algebras") {
  for (const Field& f : kFields) {
    const auto quad = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    const auto m = maximal_ideal(quad);
    const auto t2 = truncation_algebra(*m, 2);
    CHECK(t2.length() == 3);
    CHECK(labels(t2) == std::vector<std::string>{"1", "y", "x"});
    for (int n = 1; n <= 6; ++n) CHECK(truncation_algebra(*m, n).length() == std::size_t(2 * n - 1));
    CHECK(truncation_algebra(*m, 0).length() == 0);
    CHECK(truncation_algebra(*m, -3).length() == 0);

    const auto poly = ring({"x", "y"}, "", f);
    CHECK(truncation_algebra(*maximal_ideal(poly), 1).length() == 1);
    CHECK_THROWS_AS(truncation_algebra(Ideal(poly, parse_poly_list("x", poly->signature())), 2),
                    HypothesisError);

    const auto surface = ring({"x", "y", "z"}, "x^2 + y^2 + z^2", f);
    const auto ms = maximal_ideal(surface);
    for (int n = 1; n <= 5; ++n) {
      const auto t = truncation_algebra(*ms, n);
      CHECK(t.length() == std::size_t(n * n));
      CHECK(t.operators_commute());
      CHECK(t.operators_nilpotent());
    }
  }
}

TEST_CASE("finite-length module constructions") {
  for (const Field& f : kFields) {
    const auto ci = ring({"x", "y"}, "x^2, y^2", f);
    const auto m = maximal_ideal(ci);
    const auto S = truncation_algebra(*m, 4);
    CHECK(S.length() == 4);
    CHECK(S.socle_dimension() == 1);
    CHECK(graded_piece(*m, 0).length() == 1);
    CHECK(graded_piece(*m, 1).length() == 2);
    CHECK(graded_piece(*m, 2).length() == 1);
    CHECK(graded_piece(*m, 3).length() == 0);
    CHECK(graded_piece(*m, 1).socle_dimension() == 2);

    const auto sum = FiniteLengthModule::direct_sum(S, graded_piece(*m, 1));
    CHECK(sum.length() == 6);
    CHECK(sum.socle_dimension() == 3);
    CHECK(sum.operators_commute());

    // coker(x) tensored with S is S/xS = k[y]/(y^2).
    const auto sig = ci->signature();
    const auto coker = cokernel_over_algebra({FreeVector::from_polynomials(sig, {ci->variable(0)})}, 1, S);
    CHECK(coker.length() == 2);
    CHECK(coker.socle_dimension() == 1);

    // The routes for the action of a polynomial agree.
    const Polynomial g = parse_poly("3*x + x*y - 2*y + 5", sig);
    const auto a = S.action(g, ActionRoute::normal_form);
    CHECK(a == S.action(g, ActionRoute::operators));
    CHECK(a == S.action(g, ActionRoute::dense_table));
    for (std::size_t k = 0; k < S.length(); ++k)
      CHECK(S.act(g, SparseVec{{std::uint32_t(k), Scalar::one(f)}}) == a[k]);

    Matrix nil(f, 2, 2);
    nil(1, 0) = Scalar::one(f);
    const auto explicit_module = FiniteLengthModule::from_operators(sig, {nil, Matrix(f, 2, 2)});
    CHECK(explicit_module.operators_nilpotent());
    CHECK(explicit_module.socle_dimension() == 1);
    Matrix unit = Matrix::identity(f, 2);
    CHECK_FALSE(FiniteLengthModule::from_operators(sig, {unit, nil}).operators_nilpotent());
    Matrix other(f, 2, 2);
    other(0, 1) = Scalar::one(f);
    CHECK_FALSE(FiniteLengthModule::from_operators(sig, {nil, other}).operators_commute());
  }
}
