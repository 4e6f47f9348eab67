#pragma once

#include <string>
#include <vector>

#include "skewbox/mosaic.hpp"
#include "skewbox/summary.hpp"

namespace skewbox {

struct BoxplotStyle {
    double box_width = 40;  // pixels
    double gap = 24;        // pixels between boxes
    bool show_outliers = true;
    std::string axis_label = "value";
    // Cycled per group; 6-digit lowercase hex with leading '#'.
    std::vector<std::string> fill_colors = {"#9ecae1"};
};

struct HeatmapScale {
    double min_rate = 0.0;
    double max_rate = 0.10;  // rates above this clamp to high_color
    std::string low_color = "#1a1a40";
    std::string high_color = "#f5f5dc";
    std::string failed_color = "#ff00ff";  // cells with zero completed reps
};

// One box per summary on a shared linear value axis. Element classes: "box"
// (rect), "median" and "whisker" (lines), "outlier" (circles). Output is
// deterministic: fixed-precision coordinates, stable ordering, no timestamps.
// Throws std::invalid_argument naming the group on non-finite fields.
std::string render_boxplots(const std::vector<SkewBoxSummary>& summaries,
                            const BoxplotStyle& style = {});

// One "tile" rect per grid cell, fill linearly interpolated between
// low_color and high_color in rate (clamped at max_rate); alpha runs
// rightward, p downward. Failed cells use the sentinel color.
std::string render_mosaic(const MosaicResult& result, const HeatmapScale& scale = {});

}  // namespace skewbox
