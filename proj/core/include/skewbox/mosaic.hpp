#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewbox/fences.hpp"
#include "skewbox/rng.hpp"
#include "skewbox/sepd.hpp"

namespace skewbox {

enum class Scenario { swamping, masking };

std::string_view to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

struct GridSpec {
    std::vector<double> alpha_values;  // strictly increasing, in (0, 1)
    std::vector<double> p_values;      // strictly increasing, > 0

    // lo..hi inclusive; count == 1 collapses to {lo}. p defaults to log
    // spacing, alpha to linear. Throws on invalid endpoints.
    static GridSpec make(double alpha_lo, double alpha_hi, std::size_t alpha_count,
                         double p_lo, double p_hi, std::size_t p_count,
                         bool p_log = true);

    // The full evaluation sweep: 49 even alpha in [0.05, 0.95], 49 log-spaced
    // p in [0.5, 10].
    static GridSpec default_sweep();
};

struct SimConfig {
    Scenario scenario = Scenario::swamping;
    FenceMethod method = FenceMethod::tukey;
    int n = 20;
    int reps = 10000;
    double k = 1.5;
    std::uint64_t seed = 0;
    double contamination_fraction = 0.05;  // masking only
    double tail_quantile = 0.999;
    double color_cap = 0.10;  // carried through to rendering defaults
    int threads = 0;          // 0 = hardware concurrency
};

// Planted outliers per masking replication: round(contamination_fraction * n).
int planted_count(const SimConfig& config);

// Throws std::invalid_argument before any computation on a bad grid/config,
// e.g. "contamination must plant at least one outlier".
void validate(const GridSpec& grid, const SimConfig& config);

struct CellResult {
    double alpha = 0;
    double p = 0;
    double rate = 0;         // mean misclassification proportion over completed reps
    double stderr_rate = 0;  // Monte Carlo standard error of the mean
    long reps_completed = 0;
    long reps_failed = 0;    // degenerate-sample replications, excluded from the mean

    bool failed() const { return reps_completed == 0; }
};

struct MosaicResult {
    GridSpec grid;
    SimConfig config;
    // Row-major, p outer (increasing downward) and alpha inner (increasing
    // rightward), matching the mosaic rendering orientation.
    std::vector<CellResult> cells;
    std::string version;

    const CellResult& cell(std::size_t p_index, std::size_t alpha_index) const {
        return cells[p_index * grid.alpha_values.size() + alpha_index];
    }
};

// One swamping replication: n clean SEPD draws, fences via config.method,
// flagged/n. Empty on a degenerate-sample failure.
std::optional<double> run_swamping_rep(const SepdEvaluator& ev, const SimConfig& config,
                                       RandomStream& rng);

struct Injection {
    std::vector<double> values;
    std::vector<std::size_t> planted;  // positions that were replaced
};

// Replaces planted_count() randomly chosen positions with draws from the SEPD
// tails truncated beyond tail_quantile. Tail side per point: right with
// probability 1 - alpha (the heavier tail under the density's branch scaling).
Injection inject_outliers(std::vector<double> clean, const SepdEvaluator& ev,
                          const SimConfig& config, RandomStream& rng);

// One masking replication: (# planted not flagged) / (# planted).
std::optional<double> run_masking_rep(const SepdEvaluator& ev, const SimConfig& config,
                                      RandomStream& rng);

// All replications of one cell on substreams derived from
// (seed, alpha_index, p_index, rep). A cell whose evaluator cannot be
// constructed is marked failed with zero completed reps.
CellResult run_cell(const GridSpec& grid, std::size_t alpha_index, std::size_t p_index,
                    const SimConfig& config);

// Every cell, optionally in parallel; results are identical for any thread
// count or execution order.
MosaicResult run_mosaic(const GridSpec& grid, const SimConfig& config);

}  // namespace skewbox
