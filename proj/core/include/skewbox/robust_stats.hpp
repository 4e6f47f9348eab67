#pragma once

#include "skewbox/sample.hpp"

namespace skewbox {

struct QuartileSet {
    double q1 = 0;
    double q2 = 0;
    double q3 = 0;
    double iqr = 0;          // q3 - q1
    double siqr_lower = 0;   // q2 - q1
    double siqr_upper = 0;   // q3 - q2
};

struct SkewnessMeasures {
    double medcouple = 0;           // in [-1, 1]
    double bowley = 0;              // in [-1, 1]
    double capped_moment_skew = 0;  // in [-3.5, 3.5]
};

inline constexpr double moment_skew_cap = 3.5;

// Quantile estimator selection. Only the linear-interpolation rule (the
// common "type 7" convention) is implemented today; the enum keeps the
// estimator choice explicit at call sites that care.
enum class QuantileEstimator { linear_interpolation };

// Linear-interpolation quantile: with the sorted values x_0..x_{n-1} and
// h = (n-1)*prob, returns
// x_{floor(h)} + (h - floor(h)) * (x_{floor(h)+1} - x_{floor(h)}).
// Throws "empty sample" / "probability out of range".
double quantile(const Sample& sample, double prob,
                QuantileEstimator estimator = QuantileEstimator::linear_interpolation);
double quantile(std::span<const double> sorted_values, double prob,
                QuantileEstimator estimator = QuantileEstimator::linear_interpolation);

QuartileSet quartiles(const Sample& sample,
                      QuantileEstimator estimator = QuantileEstimator::linear_interpolation);

// Kernel medcouple: the median of
//   h(x_i, x_j) = ((x_j - Q2) - (Q2 - x_i)) / (x_j - x_i)
// over all pairs with x_i <= Q2 <= x_j, where pairs tied at the median use
// the sign kernel h = sign(i + j - 1 - t) with i, j 1-based over the t
// observations equal to Q2. Even kernel counts take the midpoint of the two
// central order statistics. O(n^2); fine for the sample sizes used here.
// Throws "too few observations" (n < 3) and
// "degenerate sample: zero spread" (constant sample).
double medcouple(const Sample& sample);

// Bowley's quartile skewness (Q3 + Q1 - 2*Q2) / IQR, in [-1, 1].
// Throws "degenerate sample: zero IQR".
double bowley(const QuartileSet& q);

// Adjusted Fisher-Pearson skewness G1 = sqrt(n(n-1))/(n-2) * m3/m2^(3/2)
// with m_k the averaged central moments, clamped to [-3.5, 3.5].
// Throws "too few observations" (n < 3) and
// "degenerate sample: zero spread" (zero variance).
double capped_moment_skewness(const Sample& sample);

SkewnessMeasures skewness_measures(const Sample& sample);

}  // namespace skewbox
