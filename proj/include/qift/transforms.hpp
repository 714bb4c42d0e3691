#pragma once

#include <cstdint>
#include <vector>

#include "qift/bitops.hpp"
#include "qift/int128.hpp"
#include "qift/periodic_state.hpp"
#include "qift/transform_spec.hpp"

namespace qift {

/// Width ceiling for materialising a full outcome distribution (2^n doubles).
inline constexpr int kFullDistributionMaxWidth = 30;

/// Largest phase order for which rp() keeps an explicit histogram; beyond it
/// the amplitude sum streams term by term instead of binning.
inline constexpr int kHistogramMaxOrder = 24;

/// Exact integer counts of each phase class q accumulated over the terms
/// x(j) = x0 + j*r of a periodic state. Counts are the only carrier of
/// amplitude information: |sum| is reconstructed from them afterwards.
struct PhaseHistogram {
    int order = 1;
    std::vector<std::uint64_t> counts;  // size 2^order, indexed by q

    std::uint64_t total() const;
};

PhaseHistogram phase_histogram(const PeriodicState& state, const TransformSpec& spec,
                               std::uint64_t y);

/// |（1/A) Σ_j ω^{q_j}|² for ω = exp(2πi/2^m). When the phase order is at
/// most 2 every amplitude is a Gaussian integer, so the value is an exact
/// ratio of integers carried alongside the rounded double.
struct RelProb {
    double value = 0.0;
    bool exact = false;
    uint128_t numerator = 0;    // meaningful only when exact
    uint128_t denominator = 1;  // meaningful only when exact
};

/// Relative probability of outcome y. Dispatch: order ≤ 2 uses the exact
/// Gaussian-integer path; the exact QFT uses the closed-form geometric sum;
/// everything else bins phases exactly and combines with tabulated angles.
RelProb rp(const PeriodicState& state, const TransformSpec& spec, std::uint64_t y);

/// Combine an exact histogram into a relative probability; a_terms is the
/// term count A the histogram was accumulated over.
RelProb rp_from_histogram(const PhaseHistogram& hist, std::uint64_t a_terms);

/// Closed-form exact-QFT relative probability |sin(πAθ)/(A·sin(πθ))|² with
/// θ = frac(r·y/2^n); returns exactly 1 when θ = 0.
double rp_qft_closed_form(const PeriodicState& state, std::uint64_t y);

/// Measurement probability (A/N)·rp.
double prob(const PeriodicState& state, const TransformSpec& spec, std::uint64_t y);

/// Scale an already-computed relative probability to a measurement
/// probability without re-evaluating the amplitude sum.
double prob_from_rp(const RelProb& r, const PeriodicState& state);

struct DistributionResult {
    std::vector<double> probs;  // indexed by outcome y
    double total;               // sum of all entries, accumulated in ascending y
};

/// Probability of every outcome y in [0, 2^n). Refuses n above the width
/// ceiling unless force is set. Thread count never affects the result;
/// threads = 0 picks hardware concurrency.
DistributionResult full_distribution(const PeriodicState& state, const TransformSpec& spec,
                                     int threads = 0, bool force = false);

struct UnitaryReport {
    bool unitary = false;
    double max_deviation = 0.0;  // exactly 0 when the check ran on integers
    bool exact = false;          // true when the Gaussian-integer path was used
};

/// Column-orthogonality check of the transform matrix: for every pair
/// (x, x'), Σ_y ω^{q(x,y)}·conj(ω^{q(x',y)}) must equal N·δ. The integral
/// transform is checked in exact Gaussian integers; other specs against the
/// tolerance. Capped at n ≤ 12 (cost grows as 2^{3n}).
UnitaryReport unitary_check(int n, const TransformSpec& spec, double tolerance = 1e-9,
                            int threads = 0);

/// Analytic floor (8/π²)·sin²(πm/(4n)) on the per-peak relative probability
/// of a truncated transform keeping m terms at width n.
double barenco_bound(int n, int m);

/// Whether the floor above is actually guaranteed, which requires
/// m > log2(n) + 2.
bool barenco_guaranteed(int n, int m);

}  // namespace qift
