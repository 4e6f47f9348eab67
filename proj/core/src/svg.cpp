#include "skewbox/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace skewbox {

namespace {

// Fixed two-decimal coordinates: deterministic, locale-free.
std::string px(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (ec != std::errc{}) return "0.00";
    return std::string(buf, ptr);
}

// Three-significant-digit tick labels.
std::string tick_label(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 3);
    if (ec != std::errc{}) return "?";
    return std::string(buf, ptr);
}

struct Rgb {
    int r, g, b;
};

Rgb parse_color(const std::string& hex) {
    if (hex.size() != 7 || hex[0] != '#') {
        throw std::invalid_argument("invalid color: " + hex);
    }
    auto nib = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid color: " + hex);
    };
    return Rgb{nib(hex[1]) * 16 + nib(hex[2]), nib(hex[3]) * 16 + nib(hex[4]),
               nib(hex[5]) * 16 + nib(hex[6])};
}

std::string to_hex(const Rgb& c) {
    static const char* digits = "0123456789abcdef";
    std::string s = "#......";
    s[1] = digits[(c.r >> 4) & 15];
    s[2] = digits[c.r & 15];
    s[3] = digits[(c.g >> 4) & 15];
    s[4] = digits[c.g & 15];
    s[5] = digits[(c.b >> 4) & 15];
    s[6] = digits[c.b & 15];
    return s;
}

Rgb lerp(const Rgb& lo, const Rgb& hi, double t) {
    auto ch = [&](int a, int b) {
        return static_cast<int>(std::lround(a + t * (b - a)));
    };
    return Rgb{ch(lo.r, hi.r), ch(lo.g, hi.g), ch(lo.b, hi.b)};
}

std::string line(double x1, double y1, double x2, double y2, const char* cls) {
    std::string s = "<line class=\"";
    s += cls;
    s += "\" x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" +
         px(y2) + "\"/>\n";
    return s;
}

std::string text(double x, double y, const char* cls, const std::string& content,
                 const std::string& extra = "") {
    std::string s = "<text class=\"";
    s += cls;
    s += "\" x=\"" + px(x) + "\" y=\"" + px(y) + "\"";
    s += extra;
    s += ">" + content + "</text>\n";
    return s;
}

// 5 evenly spaced axis ticks over [lo, hi].
std::vector<double> axis_ticks(double lo, double hi) {
    std::vector<double> t(5);
    for (int i = 0; i < 5; ++i) t[i] = lo + (hi - lo) * i / 4.0;
    return t;
}

constexpr double margin_left = 64;
constexpr double margin_right = 20;
constexpr double margin_top = 20;
constexpr double margin_bottom = 56;

std::string document_open(double width, double height) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) +
                    "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " +
                    px(height) + "\">\n";
    s += "<style>\n"
         ".frame { stroke: #333333; stroke-width: 1; }\n"
         ".tick { stroke: #333333; stroke-width: 1; }\n"
         ".whisker { stroke: #222222; stroke-width: 1.5; }\n"
         ".median { stroke: #000000; stroke-width: 2; }\n"
         ".box { stroke: #222222; stroke-width: 1; }\n"
         ".outlier { fill: none; stroke: #222222; stroke-width: 1; }\n"
         "text { font-family: monospace; font-size: 11px; fill: #111111; }\n"
         ".axis-title { font-size: 12px; }\n"
         "</style>\n";
    return s;
}

}  // namespace

std::string render_boxplots(const std::vector<SkewBoxSummary>& summaries,
                            const BoxplotStyle& style) {
    if (summaries.empty()) {
        throw std::invalid_argument("render_boxplots: no summaries");
    }
    if (!(style.box_width > 0) || !(style.gap >= 0)) {
        throw std::invalid_argument("render_boxplots: invalid geometry");
    }
    for (const std::string& c : style.fill_colors) parse_color(c);

    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    for (const SkewBoxSummary& s : summaries) {
        for (double v : {s.ymin, s.lower, s.middle, s.upper, s.ymax}) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("render_boxplots: non-finite summary for group '" +
                                            s.group_label + "'");
            }
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        if (style.show_outliers) {
            for (const Outlier& o : s.outliers) {
                if (!std::isfinite(o.value)) {
                    throw std::invalid_argument(
                        "render_boxplots: non-finite outlier for group '" + s.group_label +
                        "'");
                }
                vmin = std::min(vmin, o.value);
                vmax = std::max(vmax, o.value);
            }
        }
    }
    if (vmin == vmax) {
        vmin -= 1.0;
        vmax += 1.0;
    }
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;

    const std::size_t ng = summaries.size();
    const double ngd = static_cast<double>(ng);
    const double plot_w = ngd * style.box_width + (ngd + 1) * style.gap;
    const double plot_h = 320;
    const double width = margin_left + plot_w + margin_right;
    const double height = margin_top + plot_h + margin_bottom;
    const double y0 = margin_top;

    auto ty = [&](double v) { return y0 + (vmax - v) / (vmax - vmin) * plot_h; };

    std::string svg = document_open(width, height);

    // frame + value axis
    svg += line(margin_left, y0, margin_left, y0 + plot_h, "frame");
    svg += line(margin_left, y0 + plot_h, margin_left + plot_w, y0 + plot_h, "frame");
    for (double v : axis_ticks(vmin, vmax)) {
        const double y = ty(v);
        svg += line(margin_left - 5, y, margin_left, y, "tick");
        svg += text(margin_left - 8, y + 4, "tick-label", tick_label(v),
                    " text-anchor=\"end\"");
    }
    svg += text(16, y0 + plot_h / 2, "axis-title", style.axis_label,
                " text-anchor=\"middle\" transform=\"rotate(-90 16 " +
                    px(y0 + plot_h / 2) + ")\"");

    for (std::size_t i = 0; i < ng; ++i) {
        const SkewBoxSummary& s = summaries[i];
        const double x_left =
            margin_left + style.gap +
            static_cast<double>(i) * (style.box_width + style.gap);
        const double x_mid = x_left + style.box_width / 2;
        const std::string& fill =
            style.fill_colors.empty() ? std::string("#9ecae1")
                                      : style.fill_colors[i % style.fill_colors.size()];

        // whiskers first so the box covers their inner ends
        svg += line(x_mid, ty(s.ymin), x_mid, ty(s.lower), "whisker");
        svg += line(x_mid, ty(s.upper), x_mid, ty(s.ymax), "whisker");
        svg += "<rect class=\"box\" x=\"" + px(x_left) + "\" y=\"" + px(ty(s.upper)) +
               "\" width=\"" + px(style.box_width) + "\" height=\"" +
               px(ty(s.lower) - ty(s.upper)) + "\" fill=\"" + fill + "\"/>\n";
        svg += line(x_left, ty(s.middle), x_left + style.box_width, ty(s.middle), "median");
        if (style.show_outliers) {
            for (const Outlier& o : s.outliers) {
                svg += "<circle class=\"outlier\" cx=\"" + px(x_mid) + "\" cy=\"" +
                       px(ty(o.value)) + "\" r=\"2.50\"/>\n";
            }
        }
        svg += text(x_mid, y0 + plot_h + 18, "group-label", s.group_label,
                    " text-anchor=\"middle\"");
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_mosaic(const MosaicResult& result, const HeatmapScale& scale) {
    const std::size_t na = result.grid.alpha_values.size();
    const std::size_t np = result.grid.p_values.size();
    if (na == 0 || np == 0 || result.cells.size() != na * np) {
        throw std::invalid_argument("render_mosaic: empty or inconsistent result");
    }
    if (!(scale.min_rate < scale.max_rate)) {
        throw std::invalid_argument("render_mosaic: min_rate must be below max_rate");
    }
    const Rgb lo = parse_color(scale.low_color);
    const Rgb hi = parse_color(scale.high_color);
    const Rgb failed = parse_color(scale.failed_color);

    const double tile = std::max(4.0, std::min(16.0, 480.0 / static_cast<double>(std::max(na, np))));
    const double plot_w = tile * static_cast<double>(na);
    const double plot_h = tile * static_cast<double>(np);
    const double width = margin_left + plot_w + margin_right;
    const double height = margin_top + plot_h + margin_bottom;

    std::string svg = document_open(width, height);

    // tiles: p increases downward, alpha rightward
    for (std::size_t pi = 0; pi < np; ++pi) {
        for (std::size_t ai = 0; ai < na; ++ai) {
            const CellResult& c = result.cell(pi, ai);
            Rgb color = failed;
            if (!c.failed()) {
                const double t = std::clamp(
                    (c.rate - scale.min_rate) / (scale.max_rate - scale.min_rate), 0.0, 1.0);
                color = lerp(lo, hi, t);
            }
            svg += "<rect class=\"tile\" x=\"" +
                   px(margin_left + static_cast<double>(ai) * tile) + "\" y=\"" +
                   px(margin_top + static_cast<double>(pi) * tile) + "\" width=\"" +
                   px(tile) + "\" height=\"" +
                   px(tile) + "\" fill=\"" + to_hex(color) + "\"/>\n";
        }
    }

    // axes
    svg += line(margin_left, margin_top, margin_left, margin_top + plot_h, "frame");
    svg += line(margin_left, margin_top + plot_h, margin_left + plot_w, margin_top + plot_h,
                "frame");
    for (int i = 0; i < 5; ++i) {
        const std::size_t ai = (na - 1) * static_cast<std::size_t>(i) / 4;
        const double x = margin_left + (static_cast<double>(ai) + 0.5) * tile;
        svg += line(x, margin_top + plot_h, x, margin_top + plot_h + 5, "tick");
        svg += text(x, margin_top + plot_h + 18, "tick-label",
                    tick_label(result.grid.alpha_values[ai]), " text-anchor=\"middle\"");
        const std::size_t pi = (np - 1) * static_cast<std::size_t>(i) / 4;
        const double y = margin_top + (static_cast<double>(pi) + 0.5) * tile;
        svg += line(margin_left - 5, y, margin_left, y, "tick");
        svg += text(margin_left - 8, y + 4, "tick-label", tick_label(result.grid.p_values[pi]),
                    " text-anchor=\"end\"");
    }
    svg += text(margin_left + plot_w / 2, margin_top + plot_h + 40, "axis-title", "alpha",
                " text-anchor=\"middle\"");
    svg += text(16, margin_top + plot_h / 2, "axis-title", "p",
                " text-anchor=\"middle\" transform=\"rotate(-90 16 " +
                    px(margin_top + plot_h / 2) + ")\"");

    // color bar
    const double bar_x = margin_left + plot_w / 2 - 60;
    const double bar_y = height - 14;
    for (int i = 0; i < 24; ++i) {
        const double t = i / 23.0;
        svg += "<rect class=\"colorbar\" x=\"" + px(bar_x + i * 5) + "\" y=\"" + px(bar_y) +
               "\" width=\"5.00\" height=\"8.00\" fill=\"" + to_hex(lerp(lo, hi, t)) +
               "\"/>\n";
    }
    svg += text(bar_x - 6, bar_y + 8, "tick-label", tick_label(scale.min_rate),
                " text-anchor=\"end\"");
    svg += text(bar_x + 24 * 5 + 6, bar_y + 8, "tick-label", tick_label(scale.max_rate), "");
    svg += "</svg>\n";
    return svg;
}

}  // namespace skewbox
