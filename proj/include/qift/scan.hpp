#pragma once

#include <cstdint>
#include <vector>

#include "qift/number_theory.hpp"
#include "qift/periodic_state.hpp"
#include "qift/rng.hpp"
#include "qift/transform_spec.hpp"
#include "qift/transforms.hpp"

namespace qift {

/// Width ceiling for scanning every outcome y (cost grows as N·A).
inline constexpr int kFullScanMaxWidth = 27;

/// One peak window: the four outcomes bracketing the k-th peak N·k/r.
struct PeakWindowRow {
    std::uint64_t k = 0;
    std::vector<std::uint64_t> ys;   // clamped to [0, N), deduplicated, ascending
    std::vector<double> rp_values;   // relative probability per outcome
    std::vector<double> probs;       // measurement probability per outcome
    std::vector<bool> in_window;     // success_window(y, k) per outcome
    double window_rp_sum = 0.0;      // Σ rp over the row — the window's Pr(y)
    bool window_hit = false;         // some outcome lies in the success window
    bool recovered_valid = false;
    Fraction recovered;              // best_approx of the first in-window outcome
};

/// An outcome whose relative probability exceeded the full-scan threshold.
struct ThresholdHit {
    std::uint64_t y = 0;
    double rp_value = 0.0;
    double prob_value = 0.0;
    Fraction recovered;
    bool matches_period = false;  // recovered equals k/r in lowest terms for some k < r
    std::uint64_t k_implied = 0;  // that k, when matches_period
    bool in_window = false;       // success_window against the nearest peak index
};

struct ScanReport {
    PeriodicState state;
    TransformSpec spec;
    std::uint64_t recovery_bound = 0;  // denominator bound used for best_approx
    bool full_mode = false;

    std::vector<PeakWindowRow> rows;  // ascending k; empty when rows_kept is false
    bool rows_kept = true;
    std::uint64_t row_count = 0;  // r - 1

    double pr_total = 0.0;   // peak mode: Σ prob over distinct tested outcomes;
                             // full mode: Σ prob over matching threshold hits
    double min_pr_y = 0.0;   // min over k of the window Pr(y)
    std::uint64_t min_pr_k = 0;

    double threshold = 0.0;   // full mode only
    double total_prob = 0.0;  // full mode only: Σ prob over every outcome
    std::vector<ThresholdHit> threshold_hits;
};

/// Test the four outcomes around every peak N·k/r (k = 1..r-1; k = 0 is the
/// trivial peak and skipped). Outcomes shared between adjacent windows count
/// once toward pr_total. Results never depend on the thread count.
ScanReport peak_scan(const PeriodicState& state, const TransformSpec& spec, int threads = 0,
                     bool force = false, bool keep_rows = true);

/// Evaluate rp for every outcome y, record those above the threshold with
/// their recovered fractions, and attach the same per-peak window rows as
/// peak_scan. y = 0 always passes trivially and is excluded from the hits.
ScanReport full_scan(const PeriodicState& state, const TransformSpec& spec,
                     double threshold = 0.05, int threads = 0, bool force = false,
                     bool keep_rows = true);

enum class RParity { Odd, Even, Any };
enum class ScanMode { Peak, Full };

struct RunConfig {
    int n = 20;
    TransformSpec spec = TransformSpec::integral();
    ScanMode mode = ScanMode::Peak;
    double threshold = 0.05;  // full mode only
    std::uint64_t seed = kDefaultSeed;
    RParity r_parity = RParity::Odd;
    int run_count = 3;
    int threads = 0;
    bool force = false;
};

struct RunDraw {
    std::uint64_t r = 0;
    std::uint64_t x0 = 0;
};

/// One random (r, x0) with x0 < r and r² < 2^n, respecting the parity
/// constraint (odd draws start at 3, others at 2).
RunDraw draw_state(Xoshiro256ss& rng, int n, RParity parity);

struct RandomRunsResult {
    std::vector<RunDraw> draws;
    std::vector<ScanReport> reports;  // aggregates only (rows dropped)
    double pr_min = 0.0;
    double min_min_pr_y = 0.0;
};

/// run_count seeded scans at one width. The per-width PRNG stream depends
/// only on (seed, n), so adding widths to a sweep never changes the draws of
/// the widths already present. Identical config ⇒ bit-identical reports.
RandomRunsResult random_runs(const RunConfig& config);

struct RunSummary {
    std::uint64_t r = 0;
    std::uint64_t x0 = 0;
    double pr_total = 0.0;
    double min_pr_y = 0.0;
};

struct TableRow {
    int n = 0;
    int runs = 0;
    double pr_min = 0.0;
    double min_min_pr_y = 0.0;
    std::vector<RunSummary> run_details;
};

struct PowerLawFit {
    double constant = 0.0;  // value ≈ constant / n^exponent
    double exponent = 0.0;
    std::size_t points = 0;
};

struct TableResult {
    TransformSpec spec;
    std::uint64_t seed = 0;
    RParity r_parity = RParity::Odd;
    int runs_per_n = 0;
    std::vector<TableRow> rows;
    bool has_fit = false;
    PowerLawFit fit;
};

/// Seeded minimum-success-probability table over widths n_from..n_to, with
/// an optional least-squares fit of pr_min against constant/n^exponent.
TableResult table_reproduce(int n_from, int n_to, const TransformSpec& spec, int runs_per_n,
                            std::uint64_t seed, RParity parity = RParity::Odd, int threads = 0,
                            bool force = false, bool with_fit = true);

/// Least-squares fit of value = constant / n^exponent over (n, value) points
/// (linear regression on the log-log pairs). All values must be positive.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

const char* to_string(RParity parity);
const char* to_string(ScanMode mode);

}  // namespace qift
