#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qift/number_theory.hpp"
#include "qift/rng.hpp"
#include "qift/transform_spec.hpp"

namespace qift {

/// Periods recovered as a fraction denominator are retried at multiples up
/// to this factor, covering reduced fractions like 8/337 for a period 674.
inline constexpr int kPeriodMultipleCap = 8;

/// Largest number the toy factoring pipeline accepts.
inline constexpr std::uint64_t kMaxFactorTarget = 1024;

struct FactorJob {
    std::uint64_t target = 15;  // odd composite in [9, 1024]
    std::uint64_t base = 0;     // 0 → draw random bases from the seed
    int c_min = 2;              // modulus scaling: smallest n with 2^n >= c_min·target²
    int max_attempts = 20;
    std::uint64_t seed = kDefaultSeed;
};

struct WidthChoice {
    int n = 0;
    double effective_c = 0.0;  // 2^n / target², lands in [c_min, 2·c_min)
};

/// Smallest register width n with 2^n >= c_min·target². Refuses choices
/// beyond the n <= 30 desk-scale cap.
WidthChoice choose_n(std::uint64_t target, int c_min);

struct AttemptRecord {
    int attempt = 0;
    std::uint64_t base = 0;
    std::uint64_t order = 0;  // multiplicative order of base — the state period
    std::uint64_t x0 = 0;
    std::uint64_t y = 0;      // sampled measurement outcome
    Fraction recovered;       // best approximation of y/2^n with denominator < target
    bool window_hit = false;  // y lies in the success window of its nearest peak
    std::vector<std::uint64_t> candidates;  // candidate periods tested in order
    std::uint64_t period_found = 0;         // first candidate p with base^p ≡ 1, else 0
    std::string outcome;  // factored | gcd-factor | no-period | odd-period |
                          // self-inverse-root | trivial-factors
    std::uint64_t factor1 = 0;
    std::uint64_t factor2 = 0;
};

struct FactorResult {
    std::uint64_t target = 0;
    TransformSpec spec;
    std::uint64_t seed = 0;
    int c_min = 2;
    int n = 0;
    double effective_c = 0.0;
    int max_attempts = 0;

    bool success = false;
    std::uint64_t factor1 = 0;
    std::uint64_t factor2 = 0;
    int attempts_used = 0;
    std::vector<AttemptRecord> transcript;
};

/// End-to-end toy factoring run: per attempt, build the periodic state for
/// the current base, sample one measurement outcome from the exact output
/// distribution, recover a candidate period by continued fractions, and try
/// to split the target. Odd periods and self-inverse roots switch to a new
/// random base; exhausted attempts return success = false (not an error).
/// Identical jobs replay identical transcripts.
FactorResult run_factor(const FactorJob& job, const TransformSpec& spec, int threads = 0);

}  // namespace qift
