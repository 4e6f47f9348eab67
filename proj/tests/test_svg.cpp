#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "skewbox/csv.hpp"
#include "skewbox/svg.hpp"

using namespace skewbox;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

SkewBoxSummary simple_summary() {
    SkewBoxSummary s;
    s.group_label = "g";
    s.ymin = -3;
    s.lower = -1;
    s.middle = 0;
    s.upper = 1;
    s.ymax = 3;
    s.n = 9;
    return s;
}

MosaicResult synthetic_mosaic(std::size_t na, std::size_t np) {
    MosaicResult r;
    r.grid.alpha_values.resize(na);
    r.grid.p_values.resize(np);
    for (std::size_t i = 0; i < na; ++i) r.grid.alpha_values[i] = 0.05 + 0.9 * i / (na - 1 + (na == 1));
    for (std::size_t i = 0; i < np; ++i) r.grid.p_values[i] = 0.5 + i;
    r.cells.resize(na * np);
    for (std::size_t pi = 0; pi < np; ++pi) {
        for (std::size_t ai = 0; ai < na; ++ai) {
            CellResult& c = r.cells[pi * na + ai];
            c.alpha = r.grid.alpha_values[ai];
            c.p = r.grid.p_values[pi];
            c.rate = 0.1 * static_cast<double>(ai + pi) / static_cast<double>(na + np);
            c.reps_completed = 10;
        }
    }
    return r;
}

// All drawn coordinates must sit inside the declared viewBox.
void check_containment(const std::string& svg) {
    std::istringstream in(svg.substr(svg.find("viewBox=\"") + 9));
    double x0, y0, w, h;
    in >> x0 >> y0 >> w >> h;
    for (const char* attr : {" x=\"", " y=\"", " cx=\"", " cy=\"", " x1=\"", " y1=\"",
                             " x2=\"", " y2=\""}) {
        std::size_t pos = 0;
        const std::string needle(attr);
        const bool is_y = needle.find('y') != std::string::npos;
        while ((pos = svg.find(needle, pos)) != std::string::npos) {
            pos += needle.size();
            const double v = std::stod(svg.substr(pos, 24));
            CHECK(v >= (is_y ? y0 : x0) - 1e-9);
            CHECK(v <= (is_y ? y0 + h : x0 + w) + 1e-9);
        }
    }
}

}  // namespace

TEST_SUITE("svg") {

TEST_CASE("boxplot: element counts for one clean group") {
    const std::string svg = render_boxplots({simple_summary()});
    CHECK(count_occurrences(svg, "<rect class=\"box\"") == 1);
    CHECK(count_occurrences(svg, "class=\"median\"") == 1);
    CHECK(count_occurrences(svg, "class=\"whisker\"") == 2);
    CHECK(count_occurrences(svg, "<circle") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    check_containment(svg);
}

TEST_CASE("boxplot: one circle per outlier, suppressible") {
    SkewBoxSummary s = simple_summary();
    s.outliers = {{0, -5.0}, {3, 6.0}, {7, 7.5}};
    const std::string svg = render_boxplots({s});
    CHECK(count_occurrences(svg, "<circle") == 3);

    BoxplotStyle quiet;
    quiet.show_outliers = false;
    CHECK(count_occurrences(render_boxplots({s}, quiet), "<circle") == 0);
}

TEST_CASE("boxplot: deterministic bytes") {
    SkewBoxSummary s = simple_summary();
    s.outliers = {{1, 4.5}};
    CHECK(render_boxplots({s, simple_summary()}) == render_boxplots({s, simple_summary()}));
}

TEST_CASE("boxplot: errors name the group") {
    SkewBoxSummary s = simple_summary();
    s.group_label = "broken";
    s.ymax = std::nan("");
    try {
        render_boxplots({s});
        FAIL("expected error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("broken") != std::string::npos);
    }
    CHECK_THROWS_AS(render_boxplots({}), std::invalid_argument);
    BoxplotStyle bad;
    bad.fill_colors = {"#12345"};
    CHECK_THROWS_AS(render_boxplots({simple_summary()}, bad), std::invalid_argument);
}

TEST_CASE("mosaic: one tile per cell") {
    const MosaicResult r = synthetic_mosaic(49, 49);
    const std::string svg = render_mosaic(r);
    CHECK(count_occurrences(svg, "<rect class=\"tile\"") == 2401);
    check_containment(svg);
}

TEST_CASE("mosaic: color mapping") {
    MosaicResult r = synthetic_mosaic(3, 1);
    HeatmapScale scale;
    scale.low_color = "#000000";
    scale.high_color = "#ffffff";

    r.cells[0].rate = 0.0;
    r.cells[1].rate = 0.25;  // above max_rate, clamps to high
    r.cells[2].rate = 0.05;  // halfway
    const std::string svg = render_mosaic(r, scale);
    CHECK(svg.find("fill=\"#000000\"") != std::string::npos);
    CHECK(svg.find("fill=\"#ffffff\"") != std::string::npos);
    CHECK(svg.find("fill=\"#808080\"") != std::string::npos);

    // all-zero rates: every tile is the low color
    MosaicResult zero = synthetic_mosaic(4, 4);
    for (CellResult& c : zero.cells) c.rate = 0.0;
    const std::string uniform = render_mosaic(zero, scale);
    CHECK(count_occurrences(uniform, "fill=\"#000000\"") >= 16);

    // failed cells use the sentinel color
    MosaicResult failed = synthetic_mosaic(2, 2);
    failed.cells[3].reps_completed = 0;
    failed.cells[3].reps_failed = 10;
    CHECK(render_mosaic(failed, scale).find("fill=\"#ff00ff\"") != std::string::npos);
}

TEST_CASE("mosaic: color monotonicity in rate") {
    HeatmapScale scale;  // dark -> light defaults
    MosaicResult r = synthetic_mosaic(5, 1);
    const double rates[] = {0.0, 0.02, 0.05, 0.08, 0.10};
    for (int i = 0; i < 5; ++i) r.cells[i].rate = rates[i];
    const std::string svg = render_mosaic(r, scale);
    // extract tile fills in order; channel values must be nondecreasing
    std::vector<int> reds;
    std::size_t pos = 0;
    while ((pos = svg.find("<rect class=\"tile\"", pos)) != std::string::npos) {
        const std::size_t f = svg.find("fill=\"#", pos) + 7;
        reds.push_back(std::stoi(svg.substr(f, 2), nullptr, 16));
        pos = f;
    }
    REQUIRE(reds.size() == 5);
    for (int i = 1; i < 5; ++i) CHECK(reds[i] > reds[i - 1]);
}

TEST_CASE("mosaic: deterministic bytes") {
    const MosaicResult r = synthetic_mosaic(9, 9);
    CHECK(render_mosaic(r) == render_mosaic(r));
}

}  // TEST_SUITE
