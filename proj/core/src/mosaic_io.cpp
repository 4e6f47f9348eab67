#include "skewbox/mosaic_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "skewbox/csv.hpp"

namespace skewbox {

std::string mosaic_to_csv(const MosaicResult& result) {
    std::string out = "alpha_index,p_index,alpha,p,rate,stderr,reps_completed,reps_failed\n";
    const std::size_t na = result.grid.alpha_values.size();
    const std::size_t np = result.grid.p_values.size();
    for (std::size_t pi = 0; pi < np; ++pi) {
        for (std::size_t ai = 0; ai < na; ++ai) {
            const CellResult& c = result.cell(pi, ai);
            out += std::to_string(ai);
            out += ',';
            out += std::to_string(pi);
            out += ',';
            out += format_double(c.alpha);
            out += ',';
            out += format_double(c.p);
            out += ',';
            out += format_double(c.rate);
            out += ',';
            out += format_double(c.stderr_rate);
            out += ',';
            out += std::to_string(c.reps_completed);
            out += ',';
            out += std::to_string(c.reps_failed);
            out += '\n';
        }
    }
    return out;
}

std::string mosaic_meta(const MosaicResult& result) {
    const GridSpec& g = result.grid;
    const SimConfig& c = result.config;
    std::ostringstream out;
    out << "scenario = " << to_string(c.scenario) << '\n'
        << "method = " << to_string(c.method) << '\n'
        << "n = " << c.n << '\n'
        << "reps = " << c.reps << '\n'
        << "k = " << format_double(c.k) << '\n'
        << "seed = " << c.seed << '\n'
        << "contamination_fraction = " << format_double(c.contamination_fraction) << '\n'
        << "tail_quantile = " << format_double(c.tail_quantile) << '\n'
        << "color_cap = " << format_double(c.color_cap) << '\n'
        << "side_rule = P(right) = 1 - alpha, tails truncated beyond tail_quantile\n"
        << "alpha_min = " << format_double(g.alpha_values.front()) << '\n'
        << "alpha_max = " << format_double(g.alpha_values.back()) << '\n'
        << "alpha_count = " << g.alpha_values.size() << '\n'
        << "p_min = " << format_double(g.p_values.front()) << '\n'
        << "p_max = " << format_double(g.p_values.back()) << '\n'
        << "p_count = " << g.p_values.size() << '\n'
        << "version = " << result.version << '\n';
    return out.str();
}

namespace {

double parse_num(const std::string& s, std::size_t row) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("mosaic csv: bad number '" + s + "' at data row " +
                                    std::to_string(row + 1));
    }
    return v;
}

}  // namespace

MosaicResult mosaic_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    const CsvTable t = read_csv(in);
    const std::vector<std::string> expected = {"alpha_index", "p_index",        "alpha",
                                               "p",           "rate",           "stderr",
                                               "reps_completed", "reps_failed"};
    if (t.header != expected) {
        throw std::invalid_argument("mosaic csv: unexpected header");
    }

    std::size_t na = 0, np = 0;
    struct Row {
        std::size_t ai, pi;
        CellResult cell;
    };
    std::vector<Row> rows;
    rows.reserve(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& f = t.rows[r];
        if (f.size() != expected.size()) {
            throw std::invalid_argument("mosaic csv: wrong field count at data row " +
                                        std::to_string(r + 1));
        }
        Row row;
        row.ai = static_cast<std::size_t>(parse_num(f[0], r));
        row.pi = static_cast<std::size_t>(parse_num(f[1], r));
        row.cell.alpha = parse_num(f[2], r);
        row.cell.p = parse_num(f[3], r);
        row.cell.rate = parse_num(f[4], r);
        row.cell.stderr_rate = parse_num(f[5], r);
        row.cell.reps_completed = static_cast<long>(parse_num(f[6], r));
        row.cell.reps_failed = static_cast<long>(parse_num(f[7], r));
        na = std::max(na, row.ai + 1);
        np = std::max(np, row.pi + 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("mosaic csv: no cells");
    if (rows.size() != na * np) {
        throw std::invalid_argument("mosaic csv: incomplete grid");
    }

    MosaicResult result;
    result.grid.alpha_values.assign(na, 0.0);
    result.grid.p_values.assign(np, 0.0);
    result.cells.resize(na * np);
    std::vector<bool> seen(na * np, false);
    for (const Row& row : rows) {
        const std::size_t i = row.pi * na + row.ai;
        if (seen[i]) throw std::invalid_argument("mosaic csv: duplicate cell");
        seen[i] = true;
        result.cells[i] = row.cell;
        result.grid.alpha_values[row.ai] = row.cell.alpha;
        result.grid.p_values[row.pi] = row.cell.p;
    }
    return result;
}

}  // namespace skewbox
