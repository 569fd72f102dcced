#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace dualhs {

/// Degree marker of the zero function (printed as "-inf").
inline constexpr int kZeroDegree = -1;

/// An integer sequence H(0..N) that agrees with a polynomial P for
/// n >= postulation, where P(n) = sum_i (-1)^i a_i binom(n + D - i, D - i).
struct NumericalFunction {
  std::vector<long long> values;
  int degree = kZeroDegree;
  std::vector<long long> coefficients;
  int postulation = 0;
  std::size_t window = 0;

  bool is_zero() const { return degree == kZeroDegree; }
  long long polynomial(long long n) const;
  /// The coefficients a_0..a_d in the basis of degree d >= degree.
  std::vector<long long> coefficients_in_degree(int d) const;
  /// H(n) for sampled n, P(n) beyond; 0 for n < 0.
  long long value(long long n) const;
};

/// Fits the least-degree polynomial through the last `window` values
/// (default d_max + 2). Throws BudgetExhausted when no polynomial of degree
/// <= d_max matches the window.
NumericalFunction fit_numerical(const std::vector<long long>& values, int d_max,
                                std::size_t window = 0);

struct FitOptions {
  std::size_t window = 0;
  /// Initial table size N (values 0..N); extended on failure.
  int start = 8;
  /// Largest N tried.
  int cap = 64;
};

/// Computes value(0..N), growing N until the fit certifies a full window
/// after the postulation index, or the cap is reached.
NumericalFunction fit_function(const std::function<long long(int)>& value, int d_max,
                               const FitOptions& options);

/// sum_n H(n) t^n = numerator(t) / (1 - t)^exponent.
struct SeriesNumerator {
  std::vector<long long> numerator;
  int exponent = 0;

  /// f^(i)(1) / i!.
  long long coefficient(int i) const;
  /// The first `count` coefficients of the series.
  std::vector<long long> expand(std::size_t count) const;
  std::string to_string() const;
};

/// Exact numerator of the series of a fitted function; exponent must exceed
/// the fitted degree.
SeriesNumerator series_numerator(const NumericalFunction& f, int exponent);

/// sum_k c_k f_k for numerators over a common exponent.
SeriesNumerator combine(const std::vector<std::pair<long long, SeriesNumerator>>& terms);

/// Coefficients of (1 - t)^k * p.
std::vector<long long> times_one_minus_t(std::vector<long long> p, int k);

long long binomial(long long n, long long k);

}  // namespace dualhs
