#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbox/fences.hpp"

namespace skewbox {

// Whisker endpoint semantics: `fence` reports the computed fences themselves
// as ymin/ymax; `data` reports the most extreme observations inside the
// fences (conventional boxplot drawing).
enum class WhiskerMode { fence, data };

std::string_view to_string(WhiskerMode m);
std::optional<WhiskerMode> parse_whisker_mode(std::string_view name);

struct SkewBoxSummary {
    std::string group_label;
    double ymin = 0;    // lower whisker endpoint
    double lower = 0;   // Q1
    double middle = 0;  // Q2
    double upper = 0;   // Q3
    double ymax = 0;    // upper whisker endpoint
    std::vector<Outlier> outliers;  // indices are positions within the group
    std::size_t n = 0;
};

SkewBoxSummary skewbox_summary(const Sample& sample, FenceMethod method,
                               const FenceParams& params, std::string group_label,
                               WhiskerMode whisker = WhiskerMode::fence);

// One entry per group; a group that fails fence preconditions carries the
// error text instead of a summary (never silently skipped).
struct GroupSummary {
    std::string label;
    std::optional<SkewBoxSummary> summary;
    std::string error;  // empty on success
};

// Partitions rows by label, summarises each group, and returns the groups in
// lexicographic label order. Throws "no data" on empty input.
std::vector<GroupSummary> grouped_summary(
    const std::vector<std::pair<std::string, double>>& rows, FenceMethod method,
    const FenceParams& params = {}, WhiskerMode whisker = WhiskerMode::fence);

}  // namespace skewbox
