#pragma once

#include <cstddef>
#include <vector>

namespace ossig {
namespace stats {

double mean(const std::vector<double>& xs);
double median(std::vector<double> xs);
/// Standard error of the mean (sample standard deviation over sqrt(n)).
double stderr_of_mean(const std::vector<double>& xs);

/// Pearson statistic sum (obs - exp)^2 / exp over the cells.
double chi_square_statistic(const std::vector<std::size_t>& observed,
                            const std::vector<double>& expected);

/// Upper tail P[X >= statistic] for X ~ chi^2(dof), via the regularized
/// incomplete gamma function Q(dof/2, x/2) (series / Lentz continued
/// fraction, as in standard numerics texts).
double chi_square_pvalue(double statistic, std::size_t dof);

/// Number of j-dimensional subspaces of an m-dimensional space over GF(2).
unsigned long long gaussian_binomial(std::size_t m, std::size_t j);

}  // namespace stats
}  // namespace ossig
