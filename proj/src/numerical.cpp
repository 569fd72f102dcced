#include "dualhs/numerical.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualhs/errors.hpp"

namespace dualhs {

long long binomial(long long n, long long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  long long out = 1;
  // After step i this is binom(n, i + 1), so the division is exact.
  for (long long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::vector<long long> times_one_minus_t(std::vector<long long> p, int k) {
  for (int step = 0; step < k; ++step) {
    p.push_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= p[i - 1];
  }
  return p;
}

namespace {

void trim(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a_i = q^(i)(1)/i! for q = (1-t)^(d+1) sum_{n<=d} P(n) t^n truncated at t^d.
std::vector<long long> binomial_basis(const NumericalFunction& f, int d) {
  std::vector<long long> head;
  for (int n = 0; n <= d; ++n) head.push_back(f.polynomial(n));
  auto q = times_one_minus_t(head, d + 1);
  q.resize(static_cast<std::size_t>(d) + 1);
  std::vector<long long> a(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i)
    for (int k = i; k <= d; ++k) a[i] += q[k] * binomial(k, i);
  return a;
}

}  // namespace

long long NumericalFunction::polynomial(long long n) const {
  long long out = 0;
  for (int i = 0; i <= degree; ++i) {
    const long long term = coefficients[i] * binomial(n + degree - i, degree - i);
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

long long NumericalFunction::value(long long n) const {
  if (n < 0) return 0;
  if (n < static_cast<long long>(values.size())) return values[n];
  return polynomial(n);
}

std::vector<long long> NumericalFunction::coefficients_in_degree(int d) const {
  if (d < degree) throw std::invalid_argument("basis degree below the fitted degree");
  if (d < 0) return {};
  return binomial_basis(*this, d);
}

NumericalFunction fit_numerical(const std::vector<long long>& values, int d_max,
                                std::size_t window) {
  if (d_max < 0) d_max = 0;
  const std::size_t w = std::max<std::size_t>(window, static_cast<std::size_t>(d_max) + 2);
  if (values.size() < w) throw BudgetExhausted("postulation not reached: too few values");

  // Finite differences of the terminal window.
  std::vector<long long> diff(values.end() - static_cast<long>(w), values.end());
  const std::size_t start = values.size() - w;
  std::vector<long long> leading;  // Delta^k V(start)
  int degree = kZeroDegree;
  for (int k = 0; k <= d_max + 1; ++k) {
    if (std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; })) {
      degree = k - 1;
      break;
    }
    if (k == d_max + 1) break;
    leading.push_back(diff.front());
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  if (degree == kZeroDegree && !std::all_of(values.end() - static_cast<long>(w), values.end(),
                                            [](long long v) { return v == 0; }))
    throw BudgetExhausted("postulation not reached: no polynomial of degree <= " +
                          std::to_string(d_max) + " fits the last " + std::to_string(w) +
                          " values");

  NumericalFunction out;
  out.values = values;
  out.window = w;
  out.degree = degree;
  // Newton form around the window start, converted to the binomial basis.
  auto newton = [&](long long n) {
    long long v = 0;
    for (int k = 0; k <= degree; ++k) v += leading[k] * binomial(n - static_cast<long long>(start), k);
    return v;
  };
  if (degree >= 0) {
    out.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0);
    std::vector<long long> head;
    for (int n = 0; n <= degree; ++n) head.push_back(newton(n));
    auto q = times_one_minus_t(head, degree + 1);
    q.resize(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
      for (int k = i; k <= degree; ++k) out.coefficients[i] += q[k] * binomial(k, i);
  }
  long long n0 = static_cast<long long>(start);
  while (n0 > 0 && values[n0 - 1] == out.polynomial(n0 - 1)) --n0;
  out.postulation = static_cast<int>(n0);
  return out;
}

NumericalFunction fit_function(const std::function<long long(int)>& value, int d_max,
                               const FitOptions& options) {
  const std::size_t w = std::max<std::size_t>(options.window, static_cast<std::size_t>(std::max(d_max, 0)) + 2);
  int n = std::max(options.start, static_cast<int>(w) - 1);
  std::vector<long long> values;
  while (true) {
    while (static_cast<int>(values.size()) <= n) values.push_back(value(static_cast<int>(values.size())));
    try {
      NumericalFunction f = fit_numerical(values, d_max, w);
      // A certified fit needs a full window of agreement past the postulation.
      if (f.postulation + static_cast<long long>(w) <= n + 1) return f;
    } catch (const BudgetExhausted&) {
      if (n >= options.cap) throw;
    }
    if (n >= options.cap)
      throw BudgetExhausted("postulation not reached by n = " + std::to_string(options.cap));
    n = std::min(options.cap, n + std::max(4, n / 2));
  }
}

long long SeriesNumerator::coefficient(int i) const {
  long long out = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) out += numerator[k] * binomial(static_cast<long long>(k), i);
  return out;
}

std::vector<long long> SeriesNumerator::expand(std::size_t count) const {
  std::vector<long long> s(count, 0);
  for (std::size_t k = 0; k < numerator.size() && k < count; ++k) s[k] = numerator[k];
  for (int e = 0; e < exponent; ++e)
    for (std::size_t k = 1; k < count; ++k) s[k] += s[k - 1];
  return s;
}

std::string SeriesNumerator::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const long long c = numerator[k];
    if (c == 0) continue;
    const long long a = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k > 0) out += (a != 1 ? "*t" : "t");
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

SeriesNumerator series_numerator(const NumericalFunction& f, int exponent) {
  if (exponent < f.degree + 1) throw std::invalid_argument("series exponent below degree + 1");
  std::vector<long long> head;
  for (int n = 0; n < f.postulation; ++n) head.push_back(f.values[n] - f.polynomial(n));
  std::vector<long long> num = times_one_minus_t(head, exponent);
  if (f.degree >= 0) {
    std::vector<long long> lead;
    for (int n = 0; n <= f.degree; ++n) lead.push_back(f.polynomial(n));
    auto q = times_one_minus_t(lead, f.degree + 1);
    q.resize(static_cast<std::size_t>(f.degree) + 1);
    q = times_one_minus_t(q, exponent - f.degree - 1);
    if (q.size() > num.size()) num.resize(q.size(), 0);
    for (std::size_t k = 0; k < q.size(); ++k) num[k] += q[k];
  }
  trim(num);
  return {num, exponent};
}

SeriesNumerator combine(const std::vector<std::pair<long long, SeriesNumerator>>& terms) {
  SeriesNumerator out;
  if (terms.empty()) return out;
  out.exponent = terms.front().second.exponent;
  for (const auto& [c, f] : terms) {
    if (f.exponent != out.exponent) throw std::invalid_argument("numerators over different exponents");
    if (f.numerator.size() > out.numerator.size()) out.numerator.resize(f.numerator.size(), 0);
    for (std::size_t k = 0; k < f.numerator.size(); ++k) out.numerator[k] += c * f.numerator[k];
  }
  trim(out.numerator);
  return out;
}

}  // namespace dualhs
