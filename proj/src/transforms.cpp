#include "qift/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qift/errors.hpp"
#include "qift/gaussian.hpp"
#include "parallel.hpp"

namespace qift {

namespace {

void check_outcome(const PeriodicState& state, std::uint64_t y) {
    if (y >> state.n)
        throw std::invalid_argument("outcome y does not fit in width " + std::to_string(state.n));
}

/// Quarter-turn bin counts for any spec whose phase order at this width is
/// at most 2. Bin index is the phase scaled up to the 4-cycle, so order-1
/// phases land on bins {0, 2} and order-2 phases map one-to-one.
std::array<std::uint64_t, 4> quarter_bins(const PeriodicState& state, const TransformSpec& spec,
                                          std::uint64_t y) {
    const int n = state.n;
    const std::uint64_t z = reverse_bits(y, n);
    const std::uint64_t a_terms = state.term_count();
    const int scale = 2 - spec.order_for(n);
    std::array<std::uint64_t, 4> bins{0, 0, 0, 0};
    std::uint64_t x = state.x0;
    for (std::uint64_t j = 0; j < a_terms; ++j, x += state.r)
        ++bins[static_cast<std::size_t>(phase_index_raw(x, y, z, n, spec) << scale)];
    return bins;
}

RelProb rp_from_quarter_bins(const std::array<std::uint64_t, 4>& bins, std::uint64_t a_terms) {
    const GaussianInt sum{static_cast<std::int64_t>(bins[0]) - static_cast<std::int64_t>(bins[2]),
                          static_cast<std::int64_t>(bins[1]) - static_cast<std::int64_t>(bins[3])};
    RelProb out;
    out.exact = true;
    out.numerator = sum.norm();
    out.denominator = static_cast<uint128_t>(a_terms) * a_terms;
    out.value = static_cast<double>(static_cast<long double>(out.numerator) /
                                    static_cast<long double>(out.denominator));
    return out;
}

RelProb exactly_one(std::uint64_t a_terms) {
    RelProb out;
    out.exact = true;
    out.numerator = static_cast<uint128_t>(a_terms) * a_terms;
    out.denominator = out.numerator;
    out.value = 1.0;
    return out;
}

/// Ordered streaming sum for orders too large to bin.
RelProb rp_streaming(const PeriodicState& state, const TransformSpec& spec, std::uint64_t y) {
    const int n = state.n;
    const std::uint64_t z = reverse_bits(y, n);
    const std::uint64_t a_terms = state.term_count();
    const double step = 2.0 * std::numbers::pi /
                        static_cast<double>(std::uint64_t{1} << spec.order_for(n));
    double re = 0.0, im = 0.0;
    std::uint64_t x = state.x0;
    for (std::uint64_t j = 0; j < a_terms; ++j, x += state.r) {
        const double angle = step * static_cast<double>(phase_index_raw(x, y, z, n, spec));
        re += std::cos(angle);
        im += std::sin(angle);
    }
    RelProb out;
    const double a = static_cast<double>(a_terms);
    out.value = std::min((re * re + im * im) / (a * a), 1.0);
    return out;
}

}  // namespace

std::uint64_t PhaseHistogram::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

PhaseHistogram phase_histogram(const PeriodicState& state, const TransformSpec& spec,
                               std::uint64_t y) {
    check_outcome(state, y);
    spec.validate_for_width(state.n);
    const int order = spec.order_for(state.n);
    if (order > kHistogramMaxOrder)
        throw resource_limit_error("phase order " + std::to_string(order) +
                                   " exceeds the histogram ceiling of " +
                                   std::to_string(kHistogramMaxOrder));
    PhaseHistogram hist;
    hist.order = order;
    hist.counts.assign(std::size_t{1} << order, 0);
    const std::uint64_t z = reverse_bits(y, state.n);
    const std::uint64_t a_terms = state.term_count();
    std::uint64_t x = state.x0;
    for (std::uint64_t j = 0; j < a_terms; ++j, x += state.r)
        ++hist.counts[phase_index_raw(x, y, z, state.n, spec)];
    return hist;
}

RelProb rp_from_histogram(const PhaseHistogram& hist, std::uint64_t a_terms) {
    if (a_terms == 0) throw std::invalid_argument("histogram over zero terms");
    if (hist.order <= 2) {
        std::array<std::uint64_t, 4> bins{0, 0, 0, 0};
        const int scale = 2 - hist.order;
        for (std::size_t q = 0; q < hist.counts.size(); ++q)
            bins[q << scale] += hist.counts[q];
        return rp_from_quarter_bins(bins, a_terms);
    }
    std::size_t nonzero = 0;
    for (std::uint64_t c : hist.counts) nonzero += (c != 0);
    // All terms share one phase: the normalized amplitude has magnitude
    // exactly 1, with no need for (and no error from) trigonometry.
    if (nonzero == 1) return exactly_one(a_terms);

    const double step = 2.0 * std::numbers::pi / static_cast<double>(hist.counts.size());
    double re = 0.0, im = 0.0;
    for (std::size_t q = 0; q < hist.counts.size(); ++q) {
        if (hist.counts[q] == 0) continue;
        const double weight = static_cast<double>(hist.counts[q]);
        const double angle = step * static_cast<double>(q);
        re += weight * std::cos(angle);
        im += weight * std::sin(angle);
    }
    RelProb out;
    const double a = static_cast<double>(a_terms);
    out.value = std::min((re * re + im * im) / (a * a), 1.0);
    return out;
}

double rp_qft_closed_form(const PeriodicState& state, std::uint64_t y) {
    check_outcome(state, y);
    const std::uint64_t modulus = state.modulus();
    const std::uint64_t t =
        static_cast<std::uint64_t>(static_cast<uint128_t>(state.r) * y % modulus);
    if (t == 0) return 1.0;
    const std::uint64_t a_terms = state.term_count();
    // The numerator angle π·A·θ is reduced exactly: sin(πx) has period 2 in
    // x, so A·t is taken mod 2N before any floating-point rounding.
    const uint128_t w = static_cast<uint128_t>(a_terms) * t % (static_cast<uint128_t>(modulus) << 1);
    const double num = std::sin(std::numbers::pi * static_cast<double>(w) /
                                static_cast<double>(modulus));
    const double den = std::sin(std::numbers::pi * static_cast<double>(t) /
                                static_cast<double>(modulus));
    const double ratio = num / (static_cast<double>(a_terms) * den);
    return std::min(ratio * ratio, 1.0);
}

RelProb rp(const PeriodicState& state, const TransformSpec& spec, std::uint64_t y) {
    check_outcome(state, y);
    spec.validate_for_width(state.n);
    if (spec.kind == TransformKind::ExactQft) {
        RelProb out;
        out.value = rp_qft_closed_form(state, y);
        if (static_cast<uint128_t>(state.r) * y % state.modulus() == 0) {
            out = exactly_one(state.term_count());
        }
        return out;
    }
    const int order = spec.order_for(state.n);
    const std::uint64_t a_terms = state.term_count();
    if (order <= 2) return rp_from_quarter_bins(quarter_bins(state, spec, y), a_terms);
    if (order <= kHistogramMaxOrder)
        return rp_from_histogram(phase_histogram(state, spec, y), a_terms);
    return rp_streaming(state, spec, y);
}

double prob_from_rp(const RelProb& r, const PeriodicState& state) {
    const std::uint64_t a_terms = state.term_count();
    if (r.exact) {
        // (A/N)·(numerator/A²) = numerator/(A·N), one extended-precision divide.
        const uint128_t denom = static_cast<uint128_t>(a_terms) << state.n;
        return static_cast<double>(static_cast<long double>(r.numerator) /
                                   static_cast<long double>(denom));
    }
    return r.value * (static_cast<double>(a_terms) / static_cast<double>(state.modulus()));
}

double prob(const PeriodicState& state, const TransformSpec& spec, std::uint64_t y) {
    return prob_from_rp(rp(state, spec, y), state);
}

DistributionResult full_distribution(const PeriodicState& state, const TransformSpec& spec,
                                     int threads, bool force) {
    spec.validate_for_width(state.n);
    if (state.n > kFullDistributionMaxWidth && !force)
        throw resource_limit_error("full distribution at n=" + std::to_string(state.n) +
                                   " exceeds the default ceiling n<=" +
                                   std::to_string(kFullDistributionMaxWidth) +
                                   "; rerun with the override to proceed");
    const std::uint64_t modulus = state.modulus();
    DistributionResult result;
    result.probs.assign(modulus, 0.0);
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunk_count = (modulus + kChunk - 1) / kChunk;
    detail::for_each_chunk(chunk_count, threads, [&](std::uint64_t chunk) {
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, modulus);
        for (std::uint64_t y = begin; y < end; ++y)
            result.probs[y] = prob(state, spec, y);
    });
    double total = 0.0;
    for (double p : result.probs) total += p;
    result.total = total;
    return result;
}

UnitaryReport unitary_check(int n, const TransformSpec& spec, double tolerance, int threads) {
    if (n < 1) throw std::invalid_argument("width n must be positive");
    if (n > 12)
        throw resource_limit_error("unitary check supports widths 1..12 (cost grows as 2^(3n))");
    spec.validate_for_width(n);
    const std::uint64_t modulus = std::uint64_t{1} << n;
    const int order = spec.order_for(n);
    const std::uint64_t phase_mod = std::uint64_t{1} << order;

    // Phase matrix: phases[x * N + y] = q(x, y). Order ≤ 12 and n ≤ 12 keep
    // every entry in 16 bits.
    std::vector<std::uint16_t> phases(static_cast<std::size_t>(modulus) * modulus);
    for (std::uint64_t y = 0; y < modulus; ++y) {
        const std::uint64_t z = reverse_bits(y, n);
        for (std::uint64_t x = 0; x < modulus; ++x)
            phases[static_cast<std::size_t>(x) * modulus + y] =
                static_cast<std::uint16_t>(phase_index_raw(x, y, z, n, spec));
    }

    const bool exact = order <= 2;
    std::vector<double> row_deviation(modulus, 0.0);
    std::vector<char> row_ok(modulus, 1);

    std::vector<double> cos_table, sin_table;
    if (!exact) {
        cos_table.resize(phase_mod);
        sin_table.resize(phase_mod);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(phase_mod);
        for (std::uint64_t q = 0; q < phase_mod; ++q) {
            cos_table[q] = std::cos(step * static_cast<double>(q));
            sin_table[q] = std::sin(step * static_cast<double>(q));
        }
    }

    detail::for_each_chunk(modulus, threads, [&](std::uint64_t x1) {
        const std::uint16_t* row1 = &phases[static_cast<std::size_t>(x1) * modulus];
        double worst = 0.0;
        bool ok = true;
        for (std::uint64_t x2 = x1; x2 < modulus; ++x2) {
            const std::uint16_t* row2 = &phases[static_cast<std::size_t>(x2) * modulus];
            if (exact) {
                std::array<std::uint64_t, 4> bins{0, 0, 0, 0};
                const int scale = 2 - order;
                for (std::uint64_t y = 0; y < modulus; ++y) {
                    const std::uint64_t diff = (row1[y] - row2[y]) & (phase_mod - 1);
                    ++bins[diff << scale];
                }
                const GaussianInt sum{
                    static_cast<std::int64_t>(bins[0]) - static_cast<std::int64_t>(bins[2]),
                    static_cast<std::int64_t>(bins[1]) - static_cast<std::int64_t>(bins[3])};
                const GaussianInt expected{
                    x1 == x2 ? static_cast<std::int64_t>(modulus) : std::int64_t{0}, 0};
                if (!(sum == expected)) {
                    ok = false;
                    const GaussianInt gap = sum - expected;
                    worst = std::max(worst, std::sqrt(static_cast<double>(gap.norm())));
                }
            } else {
                double re = 0.0, im = 0.0;
                for (std::uint64_t y = 0; y < modulus; ++y) {
                    const std::uint64_t diff = (row1[y] - row2[y]) & (phase_mod - 1);
                    re += cos_table[diff];
                    im += sin_table[diff];
                }
                if (x1 == x2) re -= static_cast<double>(modulus);
                worst = std::max(worst, std::hypot(re, im));
            }
        }
        row_deviation[x1] = worst;
        row_ok[x1] = ok ? 1 : 0;
    });

    UnitaryReport report;
    report.exact = exact;
    for (std::uint64_t x = 0; x < modulus; ++x)
        report.max_deviation = std::max(report.max_deviation, row_deviation[x]);
    if (exact) {
        report.unitary = std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });
    } else {
        report.unitary = report.max_deviation <= tolerance;
    }
    return report;
}

double barenco_bound(int n, int m) {
    if (n < 1) throw std::invalid_argument("width n must be positive");
    if (m < 0) throw std::invalid_argument("retained-term count m must be non-negative");
    const double s = std::sin(std::numbers::pi * static_cast<double>(m) /
                              (4.0 * static_cast<double>(n)));
    return 8.0 / (std::numbers::pi * std::numbers::pi) * s * s;
}

bool barenco_guaranteed(int n, int m) {
    if (n < 1) throw std::invalid_argument("width n must be positive");
    return static_cast<double>(m) > std::log2(static_cast<double>(n)) + 2.0;
}

}  // namespace qift
