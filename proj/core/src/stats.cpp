#include "ossig/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ossig {
namespace stats {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double acc = 0;
  for (double x : xs) acc += x;
  return acc / double(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double stderr_of_mean(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("stderr needs at least two samples");
  double m = mean(xs);
  double acc = 0;
  for (double x : xs) acc += (x - m) * (x - m);
  double var = acc / double(xs.size() - 1);
  return std::sqrt(var / double(xs.size()));
}

double chi_square_statistic(const std::vector<std::size_t>& observed,
                            const std::vector<double>& expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("chi square: cell count mismatch");
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0) throw std::invalid_argument("chi square: nonpositive expected count");
    double d = double(observed[i]) - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

namespace {

// regularized lower incomplete gamma P(a, x) by series expansion
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// regularized upper incomplete gamma Q(a, x) by Lentz continued fraction
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi_square_pvalue(double statistic, std::size_t dof) {
  if (dof == 0) throw std::invalid_argument("chi square: zero dof");
  if (statistic <= 0) return 1.0;
  double a = double(dof) / 2.0;
  double x = statistic / 2.0;
  // the series converges fast for x < a + 1, the continued fraction elsewhere
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

unsigned long long gaussian_binomial(std::size_t m, std::size_t j) {
  if (j > m) return 0;
  // [m, j]_2 = [m-1, j-1]_2 + 2^j * [m-1, j]_2, integer arithmetic only
  std::vector<unsigned long long> row(m + 1, 0);
  row[0] = 1;
  for (std::size_t mm = 1; mm <= m; ++mm) {
    for (std::size_t jj = std::min(mm, j); jj >= 1; --jj) {
      unsigned long long grown = row[jj];
      if (jj < 64 && grown != 0 && grown > (~0ull >> jj))
        throw std::overflow_error("gaussian binomial too large");
      row[jj] = row[jj - 1] + (grown << jj);
      if (row[jj] < row[jj - 1]) throw std::overflow_error("gaussian binomial too large");
    }
  }
  return row[j];
}

}  // namespace stats
}  // namespace ossig
