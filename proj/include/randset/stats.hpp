#pragma once

#include <cstdint>
#include <vector>

namespace randset {

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

// 95% Wilson score interval for successes out of trials.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

// Regularized upper incomplete gamma Q(a, x); Q(df/2, x/2) is the
// chi-square upper tail.
double gamma_q(double a, double x);

double chi_square_tail(double statistic, unsigned degrees_of_freedom);

// Pearson statistic against equal cell probabilities, plus its tail.
struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
};
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts);

// Two-sample Kolmogorov-Smirnov with the asymptotic tail.
struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

} // namespace randset
