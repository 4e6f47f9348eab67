#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "skewbox/csv.hpp"
#include "skewbox/mosaic.hpp"
#include "skewbox/mosaic_io.hpp"
#include "skewbox/sepd.hpp"
#include "skewbox/summary.hpp"
#include "skewbox/svg.hpp"
#include "skewbox/version.hpp"

namespace skewbox::cli {

namespace {

std::optional<double> parse_double(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

struct GridAxisSpec {
    double lo = 0, hi = 0;
    std::size_t count = 0;
    bool log_spacing = false;
};

// "lo,hi,count" with an optional trailing ",log" or ",linear".
GridAxisSpec parse_axis(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4) {
        throw std::invalid_argument(flag + ": expected lo,hi,count[,log]");
    }
    GridAxisSpec axis;
    auto lo = parse_double(parts[0]);
    auto hi = parse_double(parts[1]);
    auto count = parse_double(parts[2]);
    if (!lo || !hi || !count || *count < 1 || *count != std::floor(*count)) {
        throw std::invalid_argument(flag + ": expected lo,hi,count[,log]");
    }
    axis.lo = *lo;
    axis.hi = *hi;
    axis.count = static_cast<std::size_t>(*count);
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            axis.log_spacing = true;
        } else if (parts[3] == "linear") {
            axis.log_spacing = false;
        } else {
            throw std::invalid_argument(flag + ": spacing must be 'log' or 'linear'");
        }
    }
    return axis;
}

FenceMethod require_method(const std::string& name) {
    auto m = parse_fence_method(name);
    if (!m) {
        throw std::invalid_argument("unknown method '" + name +
                                    "'; valid methods: " + fence_method_names());
    }
    return *m;
}

int cmd_summarise(const std::string& input, const std::string& group_col,
                  const std::string& value_col, const std::string& method_name, double k,
                  const std::string& whisker_name, bool emit_indices, std::ostream& out,
                  std::ostream& err) {
    const FenceMethod method = require_method(method_name);
    auto whisker = parse_whisker_mode(whisker_name);
    if (!whisker) {
        throw std::invalid_argument("unknown whisker mode '" + whisker_name +
                                    "'; valid modes: fence, data");
    }

    CsvTable table;
    if (input.empty() || input == "-") {
        table = read_csv(std::cin);
    } else {
        table = read_csv_file(input);
    }
    const int gi = table.column(group_col);
    const int vi = table.column(value_col);
    if (gi < 0) throw std::invalid_argument("missing column '" + group_col + "'");
    if (vi < 0) throw std::invalid_argument("missing column '" + value_col + "'");

    std::vector<std::pair<std::string, double>> rows;
    std::map<std::string, std::vector<std::size_t>> source_rows;  // 1-based data rows
    std::vector<std::size_t> bad_rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& fields = table.rows[r];
        if (fields.size() <= static_cast<std::size_t>(std::max(gi, vi))) {
            bad_rows.push_back(r + 1);
            continue;
        }
        const auto v = parse_double(fields[static_cast<std::size_t>(vi)]);
        if (!v) {
            bad_rows.push_back(r + 1);
            continue;
        }
        const std::string& label = fields[static_cast<std::size_t>(gi)];
        rows.emplace_back(label, *v);
        source_rows[label].push_back(r + 1);
    }
    if (!bad_rows.empty()) {
        std::string msg = "unparseable value in data row(s):";
        for (std::size_t r : bad_rows) msg += " " + std::to_string(r);
        throw std::invalid_argument(msg);
    }

    const auto groups = grouped_summary(rows, method, FenceParams{.k = k}, *whisker);

    out << "group,ymin,lower,middle,upper,ymax,n,n_outliers,outlier_values";
    if (emit_indices) out << ",outlier_rows";
    out << '\n';
    bool any_failed = false;
    for (const GroupSummary& g : groups) {
        if (!g.summary) {
            any_failed = true;
            err << "group '" << g.label << "' failed: " << g.error << '\n';
            continue;
        }
        const SkewBoxSummary& s = *g.summary;
        out << csv_escape(g.label) << ',' << format_double(s.ymin) << ','
            << format_double(s.lower) << ',' << format_double(s.middle) << ','
            << format_double(s.upper) << ',' << format_double(s.ymax) << ',' << s.n << ','
            << s.outliers.size() << ',';
        std::string values;
        for (const Outlier& o : s.outliers) {
            if (!values.empty()) values += ';';
            values += format_double(o.value);
        }
        out << csv_escape(values);
        if (emit_indices) {
            const auto& src = source_rows[g.label];
            std::string rows_joined;
            for (const Outlier& o : s.outliers) {
                if (!rows_joined.empty()) rows_joined += ';';
                rows_joined += std::to_string(src[o.index]);
            }
            out << ',' << csv_escape(rows_joined);
        }
        out << '\n';
    }
    return any_failed ? 2 : 0;
}

int cmd_simulate(const GridAxisSpec& alpha_axis, const GridAxisSpec& p_axis,
                 const SimConfig& config, const std::string& out_prefix, std::ostream& out) {
    const GridSpec grid = GridSpec::make(alpha_axis.lo, alpha_axis.hi, alpha_axis.count,
                                         p_axis.lo, p_axis.hi, p_axis.count,
                                         p_axis.log_spacing);
    validate(grid, config);

    const MosaicResult result = run_mosaic(grid, config);

    const std::string csv_path = out_prefix + ".csv";
    const std::string meta_path = out_prefix + ".meta";
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + csv_path);
        f << mosaic_to_csv(result);
    }
    {
        std::ofstream f(meta_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + meta_path);
        f << mosaic_meta(result);
    }

    double mean = 0;
    std::size_t counted = 0, failed_cells = 0, flagged_cells = 0;
    const CellResult* max_cell = nullptr;
    for (const CellResult& c : result.cells) {
        if (c.failed()) {
            ++failed_cells;
            continue;
        }
        mean += c.rate;
        ++counted;
        if (max_cell == nullptr || c.rate > max_cell->rate) max_cell = &c;
        const double total = static_cast<double>(c.reps_completed + c.reps_failed);
        if (static_cast<double>(c.reps_failed) > 0.01 * total) ++flagged_cells;
    }
    if (counted > 0) mean /= static_cast<double>(counted);
    out << "cells=" << result.cells.size() << " mean_rate=" << format_double(mean);
    if (max_cell != nullptr) {
        out << " max_rate=" << format_double(max_cell->rate)
            << " at alpha=" << format_double(max_cell->alpha)
            << " p=" << format_double(max_cell->p);
    }
    out << " failed_cells=" << failed_cells
        << " cells_over_1pct_failed_reps=" << flagged_cells << '\n';
    return 0;
}

std::vector<SkewBoxSummary> summaries_from_csv(const std::string& path) {
    const CsvTable t = read_csv_file(path);
    const char* needed[] = {"group", "ymin",       "lower",         "middle", "upper",
                            "ymax",  "n",          "n_outliers",    "outlier_values"};
    std::map<std::string, int> col;
    for (const char* name : needed) {
        const int c = t.column(name);
        if (c < 0) throw std::invalid_argument(std::string("missing column '") + name + "'");
        col[name] = c;
    }
    std::vector<SkewBoxSummary> out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& f = t.rows[r];
        auto num = [&](const char* name) {
            const auto v = parse_double(f.at(static_cast<std::size_t>(col[name])));
            if (!v) {
                throw std::invalid_argument("bad number in column '" + std::string(name) +
                                            "' at data row " + std::to_string(r + 1));
            }
            return *v;
        };
        SkewBoxSummary s;
        s.group_label = f.at(static_cast<std::size_t>(col["group"]));
        s.ymin = num("ymin");
        s.lower = num("lower");
        s.middle = num("middle");
        s.upper = num("upper");
        s.ymax = num("ymax");
        s.n = static_cast<std::size_t>(num("n"));
        const std::string& joined = f.at(static_cast<std::size_t>(col["outlier_values"]));
        if (!joined.empty()) {
            std::istringstream vin(joined);
            std::string item;
            std::size_t i = 0;
            while (std::getline(vin, item, ';')) {
                const auto v = parse_double(item);
                if (!v) {
                    throw std::invalid_argument("bad outlier value at data row " +
                                                std::to_string(r + 1));
                }
                s.outliers.push_back(Outlier{i++, *v});
            }
        }
        out.push_back(std::move(s));
    }
    if (out.empty()) throw std::invalid_argument("no groups in input");
    return out;
}

int cmd_render(const std::string& kind, const std::string& input, const std::string& out_path,
               const BoxplotStyle& style, const HeatmapScale& scale) {
    std::string svg;
    if (kind == "boxplot") {
        svg = render_boxplots(summaries_from_csv(input), style);
    } else if (kind == "mosaic") {
        std::ifstream f(input, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open file: " + input);
        std::ostringstream buf;
        buf << f.rdbuf();
        svg = render_mosaic(mosaic_from_csv(buf.str()), scale);
    } else {
        throw std::invalid_argument("unknown render kind '" + kind +
                                    "'; valid kinds: boxplot, mosaic");
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << svg;
    return 0;
}

int cmd_sepd_check(double alpha, double p, double mu, double sigma, long ks_n,
                   std::uint64_t seed, std::ostream& out) {
    const SepdEvaluator ev(SepdParams{.mu = mu, .sigma = sigma, .alpha = alpha, .p = p});
    out << "metric,value\n";
    out << "normalizer," << format_double(ev.normalizer()) << '\n';
    out << "mass_below_mu," << format_double(ev.mass_below_mu()) << '\n';
    const double probs[] = {0.001, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 0.999};
    for (double u : probs) {
        out << "quantile_" << format_double(u) << ',' << format_double(ev.quantile(u)) << '\n';
    }

    RandomStream rng(seed, 0);
    std::vector<double> draws = ev.sample_values(rng, static_cast<std::size_t>(ks_n));
    std::sort(draws.begin(), draws.end());
    double ks = 0;
    const double n = static_cast<double>(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double f = ev.cdf(draws[i]);
        ks = std::max(ks, std::fabs((static_cast<double>(i) + 1.0) / n - f));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
    }
    const double threshold = 1.9 / std::sqrt(n);
    const bool pass = ks < threshold;
    out << "ks_n," << draws.size() << '\n';
    out << "ks_stat," << format_double(ks) << '\n';
    out << "ks_threshold," << format_double(threshold) << '\n';
    out << "ks_pass," << (pass ? 1 : 0) << '\n';
    return pass ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"skew-aware boxplot statistics, SEPD simulation, and SVG rendering"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    // summarise
    std::string in_path, group_col, value_col;
    std::string method_name = "tukey";
    std::string whisker_name = "fence";
    double k = 1.5;
    bool emit_indices = false;
    auto* summarise =
        app.add_subcommand("summarise", "grouped five-number summaries and outliers from CSV");
    summarise->add_option("--input", in_path, "input CSV ('-' or omitted reads stdin)");
    summarise->add_option("--group", group_col, "group column name")->required();
    summarise->add_option("--value", value_col, "value column name")->required();
    summarise->add_option("--method", method_name, "fence method (default tukey)");
    summarise->add_option("--k", k, "whisker coefficient (default 1.5)");
    summarise->add_option("--whisker", whisker_name, "whisker endpoints: fence|data");
    summarise->add_flag("--emit-indices", emit_indices,
                        "append 1-based source row numbers of outliers");

    // simulate
    std::string scenario_name = "swamping";
    std::string sim_method = "tukey";
    std::string alpha_axis_text = "0.05,0.95,49";
    std::string p_axis_text = "0.5,10,49,log";
    std::string out_prefix;
    SimConfig config;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo swamping/masking mosaic");
    simulate->add_option("--scenario", scenario_name, "swamping|masking");
    simulate->add_option("--method", sim_method, "fence method");
    simulate->add_option("--n", config.n, "sample size per replication");
    simulate->add_option("--reps", config.reps, "replications per cell");
    simulate->add_option("--seed", config.seed, "RNG seed");
    simulate->add_option("--grid-alpha", alpha_axis_text, "alpha axis: lo,hi,count[,log]");
    simulate->add_option("--grid-p", p_axis_text, "p axis: lo,hi,count[,log]");
    simulate->add_option("--k", config.k, "whisker coefficient");
    simulate->add_option("--contamination", config.contamination_fraction,
                         "masking contamination fraction");
    simulate->add_option("--tail-quantile", config.tail_quantile,
                         "outliers drawn beyond this quantile");
    simulate->add_option("--threads", config.threads, "worker threads (0 = auto)");
    simulate->add_option("--out", out_prefix, "output path prefix")->required();

    // render
    std::string kind, render_in, render_out;
    BoxplotStyle style;
    HeatmapScale scale;
    std::string fills;
    bool hide_outliers = false;
    auto* render = app.add_subcommand("render", "SVG boxplots or mosaic heatmaps");
    render->add_option("--kind", kind, "boxplot|mosaic")->required();
    render->add_option("--input", render_in, "input CSV")->required();
    render->add_option("--out", render_out, "output SVG path")->required();
    render->add_option("--box-width", style.box_width, "box width in px");
    render->add_option("--gap", style.gap, "gap between boxes in px");
    render->add_option("--axis-label", style.axis_label, "value axis label");
    render->add_option("--fill", fills, "comma-separated per-group fill colors");
    render->add_flag("--hide-outliers", hide_outliers, "do not draw outlier circles");
    render->add_option("--min-rate", scale.min_rate, "heatmap scale minimum");
    render->add_option("--max-rate", scale.max_rate, "heatmap scale maximum (default 0.10)");
    render->add_option("--low-color", scale.low_color, "heatmap color at min rate");
    render->add_option("--high-color", scale.high_color, "heatmap color at max rate");
    render->add_option("--failed-color", scale.failed_color, "color for failed cells");

    // sepd-check
    double alpha = 0.5, p = 2.0, mu = 0.0, sigma = 1.0;
    long ks_n = 100000;
    std::uint64_t seed = 1;
    auto* sepd_check = app.add_subcommand("sepd-check", "SEPD self-validation report");
    sepd_check->add_option("--alpha", alpha, "skewness parameter in (0,1)")->required();
    sepd_check->add_option("--p", p, "tail weight parameter > 0")->required();
    sepd_check->add_option("--mu", mu, "location (default 0)");
    sepd_check->add_option("--sigma", sigma, "scale (default 1)");
    sepd_check->add_option("--ks-n", ks_n, "sample size for the KS self-test");
    sepd_check->add_option("--seed", seed, "RNG seed");

    std::vector<const char*> argv;
    argv.push_back("skewbox");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (summarise->parsed()) {
            return cmd_summarise(in_path, group_col, value_col, method_name, k, whisker_name,
                                 emit_indices, out, err);
        }
        if (simulate->parsed()) {
            const auto s = parse_scenario(scenario_name);
            if (!s) {
                throw std::invalid_argument("unknown scenario '" + scenario_name +
                                            "'; valid scenarios: swamping, masking");
            }
            config.scenario = *s;
            config.method = require_method(sim_method);
            return cmd_simulate(parse_axis(alpha_axis_text, "--grid-alpha"),
                                parse_axis(p_axis_text, "--grid-p"), config, out_prefix, out);
        }
        if (render->parsed()) {
            if (!fills.empty()) {
                style.fill_colors.clear();
                std::istringstream fin(fills);
                std::string c;
                while (std::getline(fin, c, ',')) style.fill_colors.push_back(c);
            }
            style.show_outliers = !hide_outliers;
            return cmd_render(kind, render_in, render_out, style, scale);
        }
        if (sepd_check->parsed()) {
            return cmd_sepd_check(alpha, p, mu, sigma, ks_n, seed, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand given\n";
    return 1;
}

}  // namespace skewbox::cli
