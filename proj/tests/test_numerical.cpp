#include <doctest.h>

#include "dualhs/errors.hpp"
#include "dualhs/numerical.hpp"

using namespace dualhs;

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(4, -1) == 0);
  CHECK(times_one_minus_t({1, 1}, 1) == std::vector<long long>{1, 0, -1});
}

TEST_CASE("fitting numerical functions") {
  const auto tri = fit_numerical({1, 3, 6, 10, 15}, 2);
  CHECK(tri.degree == 2);
  CHECK(tri.coefficients == std::vector<long long>{1, 0, 0});
  CHECK(tri.postulation == 0);
  CHECK(tri.polynomial(10) == 66);

  const auto lin = fit_numerical({2, 4, 6, 8, 10, 12}, 1);
  CHECK(lin.degree == 1);
  CHECK(lin.coefficients == std::vector<long long>{2, 0});

  const auto flat = fit_numerical({1, 3, 4, 4, 4, 4}, 0);
  CHECK(flat.degree == 0);
  CHECK(flat.coefficients == std::vector<long long>{4});
  CHECK(flat.postulation == 2);

  // 2n + 1 = 2 binom(n+1, 1) - 1.
  const auto odd = fit_numerical({1, 3, 5, 7, 9, 11}, 2);
  CHECK(odd.degree == 1);
  CHECK(odd.coefficients == std::vector<long long>{2, 1});
  CHECK(odd.coefficients_in_degree(2) == std::vector<long long>{0, -2, -1});

  const auto zero = fit_numerical({3, 1, 0, 0, 0}, 1);
  CHECK(zero.is_zero());
  CHECK(zero.postulation == 2);
  CHECK(zero.coefficients_in_degree(1) == std::vector<long long>{0, 0});

  CHECK_THROWS_AS(fit_numerical({1, 2, 4, 8, 16, 32}, 2), BudgetExhausted);
  CHECK_THROWS_AS(fit_numerical({1, 2}, 2), BudgetExhausted);
}

TEST_CASE("fits extend the table until a window is certified") {
  // Agrees with 0 only from n = 12 on.
  auto late = [](int n) { return n < 12 ? 12LL - n : 0LL; };
  const auto f = fit_function(late, 0, {0, 4, 40});
  CHECK(f.is_zero());
  CHECK(f.postulation == 12);
  CHECK_THROWS_AS(fit_function([](int n) { return 1LL << n; }, 1, {0, 4, 20}), BudgetExhausted);
}

TEST_CASE("series numerators") {
  // 1 + 2t + t^2/(1-t): the dual Hilbert-Samuel series of k over (x^2, y^2).
  const auto f = fit_numerical({1, 2, 1, 1, 1, 1}, 0);
  const auto num = series_numerator(f, 1);
  CHECK(num.numerator == std::vector<long long>{1, 1, -1});
  CHECK(num.coefficient(0) == 1);
  CHECK(num.coefficient(1) == -1);
  CHECK(num.expand(6) == f.values);
  CHECK(num.to_string() == "1 + t - t^2");

  const auto tri = fit_numerical({1, 3, 6, 10, 15, 21}, 2);
  CHECK(series_numerator(tri, 3).numerator == std::vector<long long>{1});
  CHECK(series_numerator(tri, 4).numerator == std::vector<long long>{1, -1});

  // Coefficients from the numerator agree with the binomial-basis fit.
  const auto odd = fit_numerical({1, 3, 5, 7, 9, 11}, 1);
  const auto odd_num = series_numerator(odd, 2);
  CHECK(odd_num.coefficient(0) == 2);
  CHECK(odd_num.coefficient(1) == 1);

  const auto diff = combine({{1, odd_num}, {-1, series_numerator(fit_numerical({2, 4, 6, 8, 10, 12}, 1), 2)}});
  CHECK(diff.expand(4) == std::vector<long long>{-1, -1, -1, -1});
}
