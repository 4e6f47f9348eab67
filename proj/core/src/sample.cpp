#include "skewbox/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skewbox {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("empty sample");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite observation");
        }
    }
    order_.resize(values_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
    sorted_.resize(values_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
        sorted_[k] = values_[order_[k]];
    }
}

}  // namespace skewbox
