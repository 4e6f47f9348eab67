#include "skewbox/robust_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace skewbox {

double quantile(std::span<const double> sorted_values, double prob,
                QuantileEstimator estimator) {
    if (sorted_values.empty()) {
        throw std::invalid_argument("empty sample");
    }
    if (!(prob >= 0.0 && prob <= 1.0)) {
        throw std::invalid_argument("probability out of range");
    }
    switch (estimator) {
        case QuantileEstimator::linear_interpolation:
            break;
    }
    const std::size_t n = sorted_values.size();
    const double h = static_cast<double>(n - 1) * prob;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo >= n - 1) {
        return sorted_values[n - 1];
    }
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

double quantile(const Sample& sample, double prob, QuantileEstimator estimator) {
    return quantile(std::span<const double>(sample.sorted()), prob, estimator);
}

QuartileSet quartiles(const Sample& sample, QuantileEstimator estimator) {
    QuartileSet q;
    q.q1 = quantile(sample, 0.25, estimator);
    q.q2 = quantile(sample, 0.50, estimator);
    q.q3 = quantile(sample, 0.75, estimator);
    q.iqr = q.q3 - q.q1;
    q.siqr_lower = q.q2 - q.q1;
    q.siqr_upper = q.q3 - q.q2;
    return q;
}

namespace {

// Median of a scratch buffer; even counts take the midpoint of the two
// central order statistics, written in the same lo + 0.5*(hi - lo) form the
// type-7 quantile uses so both medians round identically. Destroys the
// buffer's order.
double median_of(std::vector<double>& v) {
    const std::size_t n = v.size();
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (n % 2 == 1) {
        return *mid;
    }
    const double hi = *mid;
    const double lo = *std::max_element(v.begin(), mid);
    return lo + 0.5 * (hi - lo);
}

}  // namespace

double medcouple(const Sample& sample) {
    const std::vector<double>& x = sample.sorted();
    const std::size_t n = x.size();
    if (n < 3) {
        throw std::invalid_argument("too few observations");
    }
    if (x.front() == x.back()) {
        throw std::invalid_argument("degenerate sample: zero spread");
    }
    const double m = quantile(sample, 0.5);

    // left = positions of x_i <= m, right = positions of x_j >= m; the t
    // observations equal to m occupy the contiguous run [tie_lo, tie_hi).
    std::size_t left_end = 0;
    while (left_end < n && x[left_end] <= m) ++left_end;
    std::size_t right_begin = left_end;
    while (right_begin > 0 && x[right_begin - 1] >= m) --right_begin;
    std::size_t tie_lo = right_begin;
    std::size_t tie_hi = left_end;  // empty when the median is interpolated
    const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(tie_hi) - static_cast<std::ptrdiff_t>(tie_lo);

    std::vector<double> kernels;
    kernels.reserve(left_end * (n - right_begin));
    for (std::size_t i = 0; i < left_end; ++i) {
        const double a = x[i] - m;  // <= 0
        for (std::size_t j = right_begin; j < n; ++j) {
            const double b = x[j] - m;  // >= 0
            if (x[i] == x[j]) {
                // Tied at the median: sign kernel over 1-based tie indices.
                const std::ptrdiff_t ti = static_cast<std::ptrdiff_t>(i - tie_lo) + 1;
                const std::ptrdiff_t tj = static_cast<std::ptrdiff_t>(j - tie_lo) + 1;
                const std::ptrdiff_t s = ti + tj - 1 - t;
                kernels.push_back(s < 0 ? -1.0 : (s > 0 ? 1.0 : 0.0));
            } else {
                kernels.push_back((b + a) / (b - a));
            }
        }
    }
    return median_of(kernels);
}

double bowley(const QuartileSet& q) {
    if (q.iqr <= 0.0) {
        throw std::invalid_argument("degenerate sample: zero IQR");
    }
    return (q.q3 + q.q1 - 2.0 * q.q2) / q.iqr;
}

double capped_moment_skewness(const Sample& sample) {
    const std::size_t n = sample.size();
    if (n < 3) {
        throw std::invalid_argument("too few observations");
    }
    double mean = 0;
    for (double v : sample.values()) mean += v;
    mean /= static_cast<double>(n);
    double m2 = 0, m3 = 0;
    for (double v : sample.values()) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    if (m2 <= 0.0) {
        throw std::invalid_argument("degenerate sample: zero spread");
    }
    const double nd = static_cast<double>(n);
    const double g1 = m3 / std::pow(m2, 1.5);
    const double adjusted = std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) * g1;
    return std::clamp(adjusted, -moment_skew_cap, moment_skew_cap);
}

SkewnessMeasures skewness_measures(const Sample& sample) {
    SkewnessMeasures s;
    s.medcouple = medcouple(sample);
    s.bowley = bowley(quartiles(sample));
    s.capped_moment_skew = capped_moment_skewness(sample);
    return s;
}

}  // namespace skewbox
