#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbox/robust_stats.hpp"
#include "skewbox/sample.hpp"

namespace skewbox {

enum class FenceMethod {
    tukey,
    kimber,
    hubert,
    adil,
    babura,
    walker,
    junsawang,
};

inline constexpr std::array<FenceMethod, 7> all_fence_methods = {
    FenceMethod::tukey,  FenceMethod::kimber, FenceMethod::hubert,
    FenceMethod::adil,   FenceMethod::babura, FenceMethod::walker,
    FenceMethod::junsawang,
};

std::string_view to_string(FenceMethod m);
std::optional<FenceMethod> parse_fence_method(std::string_view name);
// Comma-separated lowercase method names, for error messages.
std::string fence_method_names();

struct FenceParams {
    double k = 1.5;                      // whisker coefficient
    double bowley_clamp_epsilon = 1e-6;  // keeps Walker's factors finite
    double ratio_cap = 20.0;             // caps Walker factors and the Junsawang ratio
};

struct Fences {
    double lower = 0;
    double upper = 0;
    FenceMethod method = FenceMethod::tukey;
    FenceParams params;
};

// The seven fence rules. Each takes the quartiles plus whichever skewness
// statistic it needs; compute_fences() below wires them to a Sample.
Fences fences_tukey(const QuartileSet& q, const FenceParams& params = {});
Fences fences_kimber(const QuartileSet& q, const FenceParams& params = {});
// lower = Q1 - k*exp(-3*mc)*IQR, upper = Q3 + k*exp(3*mc)*IQR.
Fences fences_hubert(const QuartileSet& q, double mc, const FenceParams& params = {});
// Both offsets scaled by exp(sk*|mc|).
Fences fences_adil(const QuartileSet& q, double mc, double sk,
                   const FenceParams& params = {});
// Both offsets scaled by exp(6*bc).
Fences fences_babura(const QuartileSet& q, double bc, const FenceParams& params = {});
// lower factor (1-bc)/(1+bc), upper factor (1+bc)/(1-bc); bc clamped away
// from +-1 and each factor capped at params.ratio_cap.
Fences fences_walker(const QuartileSet& q, double bc, const FenceParams& params = {});
// Both offsets scaled by exp(bc * SIQR_L/SIQR_U); the ratio is capped at
// params.ratio_cap and replaced by the cap when SIQR_U is zero.
Fences fences_junsawang(const QuartileSet& q, double bc, const FenceParams& params = {});

// Dispatches to the rule above, computing only the statistics that method
// needs (medcouple for hubert/adil, bowley for babura/walker/junsawang,
// capped moment skewness for adil). Requires n >= 4; the skewness-adjusted
// methods additionally require IQR > 0. Errors carry the method name, e.g.
// "hubert: degenerate sample: zero IQR".
Fences compute_fences(const Sample& sample, FenceMethod method,
                      const FenceParams& params = {});

struct Outlier {
    std::size_t index = 0;  // original position in the sample
    double value = 0;
};

// Observations strictly below fences.lower or strictly above fences.upper,
// in ascending value order. A value exactly on a fence is not an outlier.
std::vector<Outlier> classify_outliers(const Sample& sample, const Fences& fences);

}  // namespace skewbox
