#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace niche {

double mean_of(std::span<const double> x);
// Sample standard deviation (n-1 denominator); 0 for n < 2.
double stddev_of(std::span<const double> x);
double median_of(std::vector<double> x);  // by value: sorts a copy

// Pearson correlation; zero-variance inputs are defined as 0 (caller warns).
double pearson(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

// Two-sided p-value of a t statistic with nu degrees of freedom.
double t_test_pvalue(double t, double nu);

}  // namespace niche
