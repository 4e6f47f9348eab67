#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace skewbox {

// An immutable batch of finite observations. Keeps the original ordering and
// a sorted view with the permutation back to original positions, so outlier
// reports can name the source row of each flagged value.
class Sample {
public:
    // Throws std::invalid_argument on an empty input ("empty sample") or on
    // any NaN/infinite value.
    explicit Sample(std::vector<double> values);
    explicit Sample(std::span<const double> values)
        : Sample(std::vector<double>(values.begin(), values.end())) {}

    const std::vector<double>& values() const { return values_; }

    // Nondecreasing copy of the data.
    const std::vector<double>& sorted() const { return sorted_; }

    // order()[k] is the original position of the k-th smallest value.
    // Ties keep their original relative order (stable sort).
    const std::vector<std::size_t>& order() const { return order_; }

    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    std::vector<std::size_t> order_;
};

}  // namespace skewbox
