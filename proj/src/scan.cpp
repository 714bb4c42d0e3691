#include "qift/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qift/errors.hpp"
#include "qift/rng.hpp"
#include "parallel.hpp"

namespace qift {

namespace {

/// Fixed-size scratch for one peak window, filled by a worker and merged in
/// ascending-k order so results never depend on scheduling.
struct RowScratch {
    std::uint64_t k = 0;
    int count = 0;
    std::array<std::uint64_t, 4> ys{};
    std::array<double, 4> rp_values{};
    std::array<double, 4> probs{};
    std::array<bool, 4> win{};
    double rp_sum = 0.0;
    bool window_hit = false;
    bool recovered_valid = false;
    Fraction recovered;
};

std::uint64_t recovery_bound_for(int n) { return std::uint64_t{1} << ((n + 1) / 2); }

RowScratch scan_window(const PeriodicState& state, const TransformSpec& spec, std::uint64_t k,
                       std::uint64_t bound) {
    const std::uint64_t modulus = state.modulus();
    RowScratch row;
    row.k = k;
    const std::uint64_t base =
        static_cast<std::uint64_t>(static_cast<uint128_t>(modulus) * k / state.r);
    for (int d = -1; d <= 2; ++d) {
        __int128 wide = static_cast<__int128>(base) + d;
        if (wide < 0) wide = 0;
        if (wide > static_cast<__int128>(modulus - 1)) wide = static_cast<__int128>(modulus - 1);
        const std::uint64_t y = static_cast<std::uint64_t>(wide);
        if (row.count > 0 && row.ys[static_cast<std::size_t>(row.count - 1)] == y) continue;
        const RelProb rel = rp(state, spec, y);
        const bool hit = success_window(y, k, state.r, state.n);
        const auto slot = static_cast<std::size_t>(row.count++);
        row.ys[slot] = y;
        row.rp_values[slot] = rel.value;
        row.probs[slot] = prob_from_rp(rel, state);
        row.win[slot] = hit;
        row.rp_sum += rel.value;
        if (hit && !row.window_hit) {
            row.window_hit = true;
            row.recovered = best_approx(y, modulus, bound);
            row.recovered_valid = true;
        }
    }
    return row;
}

PeakWindowRow materialize(const RowScratch& s) {
    PeakWindowRow row;
    row.k = s.k;
    const auto count = static_cast<std::size_t>(s.count);
    row.ys.assign(s.ys.begin(), s.ys.begin() + count);
    row.rp_values.assign(s.rp_values.begin(), s.rp_values.begin() + count);
    row.probs.assign(s.probs.begin(), s.probs.begin() + count);
    row.in_window.assign(s.win.begin(), s.win.begin() + count);
    row.window_rp_sum = s.rp_sum;
    row.window_hit = s.window_hit;
    row.recovered_valid = s.recovered_valid;
    row.recovered = s.recovered;
    return row;
}

/// Shared peak-window sweep: fills rows / min_pr_y / min_pr_k on the report
/// and returns the deduplicated probability total over the tested outcomes.
/// Windows are processed in bounded-size blocks so memory stays flat even
/// for very large periods; blocks and rows merge in ascending k.
double window_pass(const PeriodicState& state, const TransformSpec& spec, int threads,
                   bool keep_rows, ScanReport& report) {
    const std::uint64_t window_count = state.r - 1;
    constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
    std::vector<RowScratch> scratch(
        static_cast<std::size_t>(std::min(window_count, kBlock)));

    double pr_total = 0.0;
    double min_pr = std::numeric_limits<double>::infinity();
    std::uint64_t min_pr_k = 0;
    bool counted_any = false;
    std::uint64_t last_counted = 0;
    if (keep_rows) report.rows.reserve(static_cast<std::size_t>(window_count));

    for (std::uint64_t block_start = 1; block_start <= window_count; block_start += kBlock) {
        const std::uint64_t block_len = std::min(kBlock, window_count - block_start + 1);
        detail::for_each_chunk(block_len, threads, [&](std::uint64_t i) {
            scratch[i] = scan_window(state, spec, block_start + i, report.recovery_bound);
        });
        for (std::uint64_t i = 0; i < block_len; ++i) {
            const RowScratch& row = scratch[i];
            for (int c = 0; c < row.count; ++c) {
                const std::uint64_t y = row.ys[static_cast<std::size_t>(c)];
                if (counted_any && y <= last_counted) continue;
                pr_total += row.probs[static_cast<std::size_t>(c)];
                last_counted = y;
                counted_any = true;
            }
            if (row.rp_sum < min_pr) {
                min_pr = row.rp_sum;
                min_pr_k = row.k;
            }
            if (keep_rows) report.rows.push_back(materialize(row));
        }
    }

    report.rows_kept = keep_rows;
    report.row_count = window_count;
    report.min_pr_y = window_count == 0 ? 0.0 : min_pr;
    report.min_pr_k = min_pr_k;
    return pr_total;
}

void check_scan_state(const PeriodicState& state, const TransformSpec& spec) {
    spec.validate_for_width(state.n);
    if (state.r < 2)
        throw std::invalid_argument("scans require a period r >= 2 (r = 1 has no peaks)");
}

std::uint64_t integer_sqrt(std::uint64_t v) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace

ScanReport peak_scan(const PeriodicState& state, const TransformSpec& spec, int threads,
                     bool force, bool keep_rows) {
    check_scan_state(state, spec);
    if (state.n > kFullDistributionMaxWidth && !force)
        throw resource_limit_error("peak scan at n=" + std::to_string(state.n) +
                                   " exceeds the default ceiling n<=" +
                                   std::to_string(kFullDistributionMaxWidth) +
                                   "; rerun with the override to proceed");
    ScanReport report;
    report.state = state;
    report.spec = spec;
    report.recovery_bound = recovery_bound_for(state.n);
    report.full_mode = false;
    report.pr_total = window_pass(state, spec, threads, keep_rows, report);
    return report;
}

ScanReport full_scan(const PeriodicState& state, const TransformSpec& spec, double threshold,
                     int threads, bool force, bool keep_rows) {
    check_scan_state(state, spec);
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("threshold must lie strictly between 0 and 1");
    if (state.n > kFullScanMaxWidth && !force)
        throw resource_limit_error("full scan at n=" + std::to_string(state.n) +
                                   " exceeds the default ceiling n<=" +
                                   std::to_string(kFullScanMaxWidth) +
                                   "; rerun with the override to proceed");

    ScanReport report;
    report.state = state;
    report.spec = spec;
    report.recovery_bound = recovery_bound_for(state.n);
    report.full_mode = true;
    report.threshold = threshold;

    const std::uint64_t modulus = state.modulus();
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunk_count = (modulus + kChunk - 1) / kChunk;
    std::vector<double> chunk_totals(static_cast<std::size_t>(chunk_count), 0.0);
    std::vector<std::vector<ThresholdHit>> chunk_hits(static_cast<std::size_t>(chunk_count));

    detail::for_each_chunk(chunk_count, threads, [&](std::uint64_t chunk) {
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, modulus);
        double partial = 0.0;
        for (std::uint64_t y = begin; y < end; ++y) {
            const RelProb rel = rp(state, spec, y);
            const double p = prob_from_rp(rel, state);
            partial += p;
            if (rel.value > threshold && y != 0) {
                ThresholdHit hit;
                hit.y = y;
                hit.rp_value = rel.value;
                hit.prob_value = p;
                hit.recovered = best_approx(y, modulus, report.recovery_bound);
                if (state.r % hit.recovered.den == 0) {
                    hit.k_implied = hit.recovered.num * (state.r / hit.recovered.den);
                    hit.matches_period = hit.k_implied < state.r;
                }
                const std::uint64_t k_near = static_cast<std::uint64_t>(
                    (static_cast<uint128_t>(y) * state.r + modulus / 2) / modulus);
                hit.in_window =
                    k_near < state.r && success_window(y, k_near, state.r, state.n);
                chunk_hits[chunk].push_back(hit);
            }
        }
        chunk_totals[chunk] = partial;
    });

    double total = 0.0;
    double matched = 0.0;
    for (std::uint64_t chunk = 0; chunk < chunk_count; ++chunk) {
        total += chunk_totals[chunk];
        for (const ThresholdHit& hit : chunk_hits[chunk]) {
            if (hit.matches_period) matched += hit.prob_value;
            report.threshold_hits.push_back(hit);
        }
    }
    report.total_prob = total;
    report.pr_total = matched;
    window_pass(state, spec, threads, keep_rows, report);
    return report;
}

RunDraw draw_state(Xoshiro256ss& rng, int n, RParity parity) {
    detail::check_width(n);
    const std::uint64_t cap = integer_sqrt((std::uint64_t{1} << n) - 1);
    const std::uint64_t low = parity == RParity::Odd ? 3 : 2;
    if (cap < low)
        throw std::invalid_argument("width n=" + std::to_string(n) +
                                    " is too small to draw a random period");
    RunDraw draw;
    for (;;) {
        draw.r = low + rng.uniform_below(cap - low + 1);
        if (parity == RParity::Any) break;
        if (parity == RParity::Odd && (draw.r & 1)) break;
        if (parity == RParity::Even && !(draw.r & 1)) break;
    }
    draw.x0 = rng.uniform_below(draw.r);
    return draw;
}

RandomRunsResult random_runs(const RunConfig& config) {
    if (config.run_count < 1) throw std::invalid_argument("run_count must be >= 1");
    Xoshiro256ss rng(seed_for_width(config.seed, config.n));
    RandomRunsResult result;
    result.draws.reserve(static_cast<std::size_t>(config.run_count));
    for (int i = 0; i < config.run_count; ++i)
        result.draws.push_back(draw_state(rng, config.n, config.r_parity));

    result.pr_min = std::numeric_limits<double>::infinity();
    result.min_min_pr_y = std::numeric_limits<double>::infinity();
    for (const RunDraw& draw : result.draws) {
        const PeriodicState state(config.n, draw.x0, draw.r);
        ScanReport report =
            config.mode == ScanMode::Peak
                ? peak_scan(state, config.spec, config.threads, config.force, false)
                : full_scan(state, config.spec, config.threshold, config.threads, config.force,
                            false);
        result.pr_min = std::min(result.pr_min, report.pr_total);
        result.min_min_pr_y = std::min(result.min_min_pr_y, report.min_pr_y);
        result.reports.push_back(std::move(report));
    }
    return result;
}

TableResult table_reproduce(int n_from, int n_to, const TransformSpec& spec, int runs_per_n,
                            std::uint64_t seed, RParity parity, int threads, bool force,
                            bool with_fit) {
    if (n_from > n_to) throw std::invalid_argument("width range is empty (n_from > n_to)");
    detail::check_width(n_from);
    detail::check_width(n_to);
    if (runs_per_n < 1) throw std::invalid_argument("runs per width must be >= 1");

    TableResult table;
    table.spec = spec;
    table.seed = seed;
    table.r_parity = parity;
    table.runs_per_n = runs_per_n;

    for (int n = n_from; n <= n_to; ++n) {
        RunConfig config;
        config.n = n;
        config.spec = spec;
        config.seed = seed;
        config.r_parity = parity;
        config.run_count = runs_per_n;
        config.threads = threads;
        config.force = force;
        const RandomRunsResult runs = random_runs(config);

        TableRow row;
        row.n = n;
        row.runs = runs_per_n;
        row.pr_min = runs.pr_min;
        row.min_min_pr_y = runs.min_min_pr_y;
        for (std::size_t i = 0; i < runs.reports.size(); ++i) {
            row.run_details.push_back(RunSummary{runs.draws[i].r, runs.draws[i].x0,
                                                 runs.reports[i].pr_total,
                                                 runs.reports[i].min_pr_y});
        }
        table.rows.push_back(std::move(row));
    }

    if (with_fit && table.rows.size() >= 2) {
        std::vector<std::pair<double, double>> points;
        points.reserve(table.rows.size());
        for (const TableRow& row : table.rows)
            points.emplace_back(static_cast<double>(row.n), row.pr_min);
        table.fit = fit_power_law(points);
        table.has_fit = true;
    }
    return table;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("power-law fit needs at least two points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("power-law fit needs positive coordinates");
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / static_cast<double>(points.size());
    const double my = sy / static_cast<double>(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("power-law fit needs distinct x coordinates");
    const double slope = sxy / sxx;
    PowerLawFit fit;
    fit.exponent = -slope;
    fit.constant = std::exp(my - slope * mx);
    fit.points = points.size();
    return fit;
}

const char* to_string(RParity parity) {
    switch (parity) {
        case RParity::Odd: return "odd";
        case RParity::Even: return "even";
        case RParity::Any: return "any";
    }
    return "?";
}

const char* to_string(ScanMode mode) {
    return mode == ScanMode::Peak ? "peak" : "full";
}

}  // namespace qift
