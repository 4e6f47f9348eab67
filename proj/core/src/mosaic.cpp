#include "skewbox/mosaic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "skewbox/summary.hpp"
#include "skewbox/version.hpp"

namespace skewbox {

std::string_view to_string(Scenario s) {
    return s == Scenario::swamping ? "swamping" : "masking";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    if (name == "swamping") return Scenario::swamping;
    if (name == "masking") return Scenario::masking;
    return std::nullopt;
}

namespace {

std::vector<double> spaced(double lo, double hi, std::size_t count, bool log_spacing) {
    if (count == 0) throw std::invalid_argument("grid: count must be >= 1");
    if (!(lo <= hi)) throw std::invalid_argument("grid: lo must not exceed hi");
    if (count == 1) return {lo};
    if (lo == hi) throw std::invalid_argument("grid: count > 1 needs lo < hi");
    std::vector<double> v(count);
    if (log_spacing) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (std::size_t i = 0; i < count; ++i) {
            v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                      static_cast<double>(count - 1));
        }
        v.front() = lo;
        v.back() = hi;
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        }
        v.back() = hi;
    }
    return v;
}

}  // namespace

GridSpec GridSpec::make(double alpha_lo, double alpha_hi, std::size_t alpha_count,
                        double p_lo, double p_hi, std::size_t p_count, bool p_log) {
    GridSpec g;
    g.alpha_values = spaced(alpha_lo, alpha_hi, alpha_count, false);
    g.p_values = spaced(p_lo, p_hi, p_count, p_log);
    return g;
}

GridSpec GridSpec::default_sweep() {
    return make(0.05, 0.95, 49, 0.5, 10.0, 49, true);
}

int planted_count(const SimConfig& config) {
    return static_cast<int>(std::llround(config.contamination_fraction * config.n));
}

void validate(const GridSpec& grid, const SimConfig& config) {
    if (grid.alpha_values.empty() || grid.p_values.empty()) {
        throw std::invalid_argument("grid: empty axis");
    }
    for (std::size_t i = 0; i < grid.alpha_values.size(); ++i) {
        const double a = grid.alpha_values[i];
        if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("grid: alpha outside (0, 1)");
        if (i > 0 && !(a > grid.alpha_values[i - 1])) {
            throw std::invalid_argument("grid: alpha values must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < grid.p_values.size(); ++i) {
        const double p = grid.p_values[i];
        if (!(p > 0.0)) throw std::invalid_argument("grid: p must be positive");
        if (i > 0 && !(p > grid.p_values[i - 1])) {
            throw std::invalid_argument("grid: p values must be strictly increasing");
        }
    }
    if (config.n < 4) throw std::invalid_argument("sample size must be at least 4");
    if (config.reps < 1) throw std::invalid_argument("replication count must be >= 1");
    if (!(config.k > 0)) throw std::invalid_argument("whisker coefficient must be positive");
    if (!(config.tail_quantile > 0.5 && config.tail_quantile < 1.0)) {
        throw std::invalid_argument("tail quantile must lie in (0.5, 1)");
    }
    if (!(config.contamination_fraction >= 0.0 && config.contamination_fraction < 0.5)) {
        throw std::invalid_argument("contamination fraction out of range");
    }
    if (config.scenario == Scenario::masking && planted_count(config) < 1) {
        throw std::invalid_argument("contamination must plant at least one outlier");
    }
}

std::optional<double> run_swamping_rep(const SepdEvaluator& ev, const SimConfig& config,
                                       RandomStream& rng) {
    Sample sample(ev.sample_values(rng, static_cast<std::size_t>(config.n)));
    try {
        const Fences f = compute_fences(sample, config.method, FenceParams{.k = config.k});
        const auto outliers = classify_outliers(sample, f);
        return static_cast<double>(outliers.size()) / static_cast<double>(config.n);
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // degenerate replication
    }
}

Injection inject_outliers(std::vector<double> clean, const SepdEvaluator& ev,
                          const SimConfig& config, RandomStream& rng) {
    const std::size_t n = clean.size();
    const int m = planted_count(config);
    if (m < 1) throw std::invalid_argument("contamination must plant at least one outlier");

    // Partial Fisher-Yates for m distinct positions.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::size_t> planted;
    planted.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) +
                              rng.below(static_cast<std::uint64_t>(n - static_cast<std::size_t>(i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        planted.push_back(idx[static_cast<std::size_t>(i)]);
    }

    const double tq = config.tail_quantile;
    const double p_right = 1.0 - ev.params().alpha;  // heavier tail side
    for (std::size_t pos : planted) {
        const bool right = rng.uniform01() < p_right;
        const double u = rng.uniform01();
        const double level = right ? tq + (1.0 - tq) * u : (1.0 - tq) * u;
        clean[pos] = ev.quantile(level);
    }
    return Injection{std::move(clean), std::move(planted)};
}

std::optional<double> run_masking_rep(const SepdEvaluator& ev, const SimConfig& config,
                                      RandomStream& rng) {
    Injection inj = inject_outliers(ev.sample_values(rng, static_cast<std::size_t>(config.n)),
                                    ev, config, rng);
    Sample sample(std::move(inj.values));
    try {
        const Fences f = compute_fences(sample, config.method, FenceParams{.k = config.k});
        const auto outliers = classify_outliers(sample, f);
        std::size_t undetected = 0;
        for (std::size_t pos : inj.planted) {
            const bool flagged = std::any_of(outliers.begin(), outliers.end(),
                                             [&](const Outlier& o) { return o.index == pos; });
            if (!flagged) ++undetected;
        }
        return static_cast<double>(undetected) / static_cast<double>(inj.planted.size());
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

CellResult run_cell(const GridSpec& grid, std::size_t alpha_index, std::size_t p_index,
                    const SimConfig& config) {
    CellResult cell;
    cell.alpha = grid.alpha_values[alpha_index];
    cell.p = grid.p_values[p_index];

    SepdParams params{.mu = 0.0, .sigma = 1.0, .alpha = cell.alpha, .p = cell.p};
    std::optional<SepdEvaluator> ev;
    try {
        ev.emplace(params);
    } catch (const std::invalid_argument&) {
        cell.reps_failed = config.reps;
        return cell;  // evaluator construction failed: cell marked failed
    }

    double sum = 0.0, sumsq = 0.0;
    for (int rep = 0; rep < config.reps; ++rep) {
        RandomStream rng = RandomStream::for_cell_rep(config.seed, alpha_index, p_index,
                                                      static_cast<std::uint64_t>(rep));
        const std::optional<double> r = config.scenario == Scenario::swamping
                                            ? run_swamping_rep(*ev, config, rng)
                                            : run_masking_rep(*ev, config, rng);
        if (r) {
            sum += *r;
            sumsq += *r * *r;
            ++cell.reps_completed;
        } else {
            ++cell.reps_failed;
        }
    }
    if (cell.reps_completed > 0) {
        const double c = static_cast<double>(cell.reps_completed);
        cell.rate = sum / c;
        if (cell.reps_completed > 1) {
            const double var = std::max(0.0, (sumsq - c * cell.rate * cell.rate) / (c - 1.0));
            cell.stderr_rate = std::sqrt(var / c);
        }
    }
    return cell;
}

MosaicResult run_mosaic(const GridSpec& grid, const SimConfig& config) {
    validate(grid, config);
    MosaicResult result;
    result.grid = grid;
    result.config = config;
    result.version = version;
    const std::size_t na = grid.alpha_values.size();
    const std::size_t np = grid.p_values.size();
    result.cells.resize(na * np);

    unsigned hw = std::thread::hardware_concurrency();
    const std::size_t n_threads =
        config.threads > 0 ? static_cast<std::size_t>(config.threads)
                           : std::max<std::size_t>(1, hw);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= result.cells.size()) break;
            const std::size_t pi = i / na;
            const std::size_t ai = i % na;
            result.cells[i] = run_cell(grid, ai, pi, config);
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return result;
}

}  // namespace skewbox
