#include "skewbox/summary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skewbox {

std::string_view to_string(WhiskerMode m) {
    return m == WhiskerMode::fence ? "fence" : "data";
}

std::optional<WhiskerMode> parse_whisker_mode(std::string_view name) {
    if (name == "fence") return WhiskerMode::fence;
    if (name == "data") return WhiskerMode::data;
    return std::nullopt;
}

SkewBoxSummary skewbox_summary(const Sample& sample, FenceMethod method,
                               const FenceParams& params, std::string group_label,
                               WhiskerMode whisker) {
    const Fences f = compute_fences(sample, method, params);
    const QuartileSet q = quartiles(sample);

    SkewBoxSummary s;
    s.group_label = std::move(group_label);
    s.lower = q.q1;
    s.middle = q.q2;
    s.upper = q.q3;
    s.n = sample.size();
    s.outliers = classify_outliers(sample, f);

    if (whisker == WhiskerMode::fence) {
        s.ymin = f.lower;
        s.ymax = f.upper;
    } else {
        // Most extreme observations inside the fences. The middle half of the
        // data always lies inside, so both endpoints exist.
        const std::vector<double>& x = sample.sorted();
        auto lo = std::lower_bound(x.begin(), x.end(), f.lower);
        s.ymin = *lo;
        auto hi = std::upper_bound(x.begin(), x.end(), f.upper);
        s.ymax = *(hi - 1);
    }
    return s;
}

std::vector<GroupSummary> grouped_summary(
    const std::vector<std::pair<std::string, double>>& rows, FenceMethod method,
    const FenceParams& params, WhiskerMode whisker) {
    if (rows.empty()) {
        throw std::invalid_argument("no data");
    }
    std::map<std::string, std::vector<double>> groups;
    for (const auto& [label, value] : rows) {
        groups[label].push_back(value);
    }
    std::vector<GroupSummary> out;
    out.reserve(groups.size());
    for (auto& [label, values] : groups) {
        GroupSummary g;
        g.label = label;
        try {
            Sample sample(std::move(values));
            g.summary = skewbox_summary(sample, method, params, label, whisker);
        } catch (const std::invalid_argument& e) {
            g.error = e.what();
        }
        out.push_back(std::move(g));
    }
    return out;  // std::map iterates labels lexicographically
}

}  // namespace skewbox
