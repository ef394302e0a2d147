#pragma once

#include <span>

namespace hypertrees::stats {

/// Regularized upper incomplete gamma Q(a, x): series for x < a+1,
/// continued fraction otherwise.
double gammq(double a, double x);

/// Pearson statistic sum (obs - exp)^2 / exp.
double chi_square_stat(std::span<const long> observed, std::span<const double> expected);

/// Upper tail of chi-square with dof degrees of freedom.
double chi_square_pvalue(double stat, long dof);

}  // namespace hypertrees::stats
