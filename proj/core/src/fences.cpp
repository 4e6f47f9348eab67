#include "skewbox/fences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skewbox {

std::string_view to_string(FenceMethod m) {
    switch (m) {
        case FenceMethod::tukey: return "tukey";
        case FenceMethod::kimber: return "kimber";
        case FenceMethod::hubert: return "hubert";
        case FenceMethod::adil: return "adil";
        case FenceMethod::babura: return "babura";
        case FenceMethod::walker: return "walker";
        case FenceMethod::junsawang: return "junsawang";
    }
    return "?";
}

std::optional<FenceMethod> parse_fence_method(std::string_view name) {
    for (FenceMethod m : all_fence_methods) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

std::string fence_method_names() {
    std::string out;
    for (FenceMethod m : all_fence_methods) {
        if (!out.empty()) out += ", ";
        out += to_string(m);
    }
    return out;
}

namespace {

void check_params(const FenceParams& p) {
    if (!(p.k > 0)) throw std::invalid_argument("whisker coefficient must be positive");
    if (!(p.bowley_clamp_epsilon > 0 && p.bowley_clamp_epsilon < 1)) {
        throw std::invalid_argument("bowley clamp epsilon out of range");
    }
    if (!(p.ratio_cap >= 1)) throw std::invalid_argument("ratio cap must be >= 1");
}

Fences make(const QuartileSet& q, double lower_offset, double upper_offset,
            FenceMethod method, const FenceParams& params) {
    return Fences{q.q1 - lower_offset, q.q3 + upper_offset, method, params};
}

}  // namespace

Fences fences_tukey(const QuartileSet& q, const FenceParams& params) {
    check_params(params);
    return make(q, params.k * q.iqr, params.k * q.iqr, FenceMethod::tukey, params);
}

Fences fences_kimber(const QuartileSet& q, const FenceParams& params) {
    check_params(params);
    return make(q, 2.0 * params.k * q.siqr_lower, 2.0 * params.k * q.siqr_upper,
                FenceMethod::kimber, params);
}

Fences fences_hubert(const QuartileSet& q, double mc, const FenceParams& params) {
    check_params(params);
    if (!(mc >= -1.0 && mc <= 1.0)) {
        throw std::invalid_argument("medcouple out of range");
    }
    return make(q, params.k * std::exp(-3.0 * mc) * q.iqr,
                params.k * std::exp(3.0 * mc) * q.iqr, FenceMethod::hubert, params);
}

Fences fences_adil(const QuartileSet& q, double mc, double sk, const FenceParams& params) {
    check_params(params);
    if (!(mc >= -1.0 && mc <= 1.0)) {
        throw std::invalid_argument("medcouple out of range");
    }
    if (!(sk >= -moment_skew_cap && sk <= moment_skew_cap)) {
        throw std::invalid_argument("uncapped skewness passed");
    }
    const double factor = std::exp(sk * std::fabs(mc));
    return make(q, params.k * q.iqr * factor, params.k * q.iqr * factor,
                FenceMethod::adil, params);
}

Fences fences_babura(const QuartileSet& q, double bc, const FenceParams& params) {
    check_params(params);
    if (!(bc >= -1.0 && bc <= 1.0)) {
        throw std::invalid_argument("bowley coefficient out of range");
    }
    const double factor = std::exp(6.0 * bc);
    return make(q, params.k * factor * q.iqr, params.k * factor * q.iqr,
                FenceMethod::babura, params);
}

Fences fences_walker(const QuartileSet& q, double bc, const FenceParams& params) {
    check_params(params);
    if (!(bc >= -1.0 && bc <= 1.0)) {
        throw std::invalid_argument("bowley coefficient out of range");
    }
    const double eps = params.bowley_clamp_epsilon;
    const double b = std::clamp(bc, -1.0 + eps, 1.0 - eps);
    const double lower_factor = std::min((1.0 - b) / (1.0 + b), params.ratio_cap);
    const double upper_factor = std::min((1.0 + b) / (1.0 - b), params.ratio_cap);
    return make(q, params.k * q.iqr * lower_factor, params.k * q.iqr * upper_factor,
                FenceMethod::walker, params);
}

Fences fences_junsawang(const QuartileSet& q, double bc, const FenceParams& params) {
    check_params(params);
    if (!(bc >= -1.0 && bc <= 1.0)) {
        throw std::invalid_argument("bowley coefficient out of range");
    }
    const double ratio = q.siqr_upper == 0.0
                             ? params.ratio_cap
                             : std::min(q.siqr_lower / q.siqr_upper, params.ratio_cap);
    const double factor = std::exp(bc * ratio);
    return make(q, params.k * factor * q.iqr, params.k * factor * q.iqr,
                FenceMethod::junsawang, params);
}

Fences compute_fences(const Sample& sample, FenceMethod method, const FenceParams& params) {
    check_params(params);
    const std::string name(to_string(method));
    if (sample.size() < 4) {
        throw std::invalid_argument(name + ": too few observations for fence method");
    }
    const QuartileSet q = quartiles(sample);
    const bool needs_spread = method != FenceMethod::tukey && method != FenceMethod::kimber;
    if (needs_spread && q.iqr <= 0.0) {
        throw std::invalid_argument(name + ": degenerate sample: zero IQR");
    }
    switch (method) {
        case FenceMethod::tukey:
            return fences_tukey(q, params);
        case FenceMethod::kimber:
            return fences_kimber(q, params);
        case FenceMethod::hubert:
            return fences_hubert(q, medcouple(sample), params);
        case FenceMethod::adil:
            return fences_adil(q, medcouple(sample), capped_moment_skewness(sample), params);
        case FenceMethod::babura:
            return fences_babura(q, bowley(q), params);
        case FenceMethod::walker:
            return fences_walker(q, bowley(q), params);
        case FenceMethod::junsawang:
            return fences_junsawang(q, bowley(q), params);
    }
    throw std::invalid_argument("unknown fence method");
}

std::vector<Outlier> classify_outliers(const Sample& sample, const Fences& fences) {
    std::vector<Outlier> out;
    const std::vector<double>& sorted = sample.sorted();
    const std::vector<std::size_t>& order = sample.order();
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] < fences.lower || sorted[k] > fences.upper) {
            out.push_back(Outlier{order[k], sorted[k]});
        }
    }
    return out;  // ascending by value: sorted-view traversal
}

}  // namespace skewbox
