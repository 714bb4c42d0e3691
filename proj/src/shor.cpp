#include "qift/shor.hpp"

#include <algorithm>
#include <stdexcept>

#include "qift/errors.hpp"
#include "qift/periodic_state.hpp"
#include "qift/transforms.hpp"

namespace qift {

namespace {

/// Smallest prime factor by trial division, or 0 when the value is prime.
std::uint64_t smallest_factor(std::uint64_t v) {
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return d;
    return 0;
}

void validate_target(std::uint64_t target) {
    if (target > kMaxFactorTarget)
        throw std::invalid_argument("factoring target exceeds the cap of " +
                                    std::to_string(kMaxFactorTarget));
    if (target < 9 || (target & 1) == 0)
        throw std::invalid_argument("factoring target must be an odd composite >= 9");
    if (smallest_factor(target) == 0)
        throw std::invalid_argument("factoring target " + std::to_string(target) + " is prime");
}

/// Inverse-CDF draw: the first outcome whose cumulative probability exceeds
/// u·total. The walk order is fixed (ascending y), so a given u always maps
/// to the same outcome.
std::uint64_t sample_outcome(const DistributionResult& dist, double u) {
    const double stop = u * dist.total;
    double acc = 0.0;
    for (std::uint64_t y = 0; y < dist.probs.size(); ++y) {
        acc += dist.probs[y];
        if (acc > stop) return y;
    }
    return dist.probs.size() - 1;
}

std::uint64_t draw_coprime_base(Xoshiro256ss& rng, std::uint64_t target) {
    // Any residue in [2, target-2]; non-coprime draws are kept — they factor
    // the target immediately via the gcd.
    return 2 + rng.uniform_below(target - 3);
}

}  // namespace

WidthChoice choose_n(std::uint64_t target, int c_min) {
    if (target < 3) throw std::invalid_argument("target must be >= 3");
    if (c_min < 2) throw std::invalid_argument("c_min must be >= 2");
    const uint128_t needed = static_cast<uint128_t>(c_min) * target * target;
    int n = 1;
    while ((static_cast<uint128_t>(1) << n) < needed) {
        ++n;
        if (n > 30)
            throw resource_limit_error("register width for target " + std::to_string(target) +
                                       " with c_min=" + std::to_string(c_min) +
                                       " exceeds the n<=30 cap");
    }
    WidthChoice choice;
    choice.n = n;
    choice.effective_c = static_cast<double>(std::uint64_t{1} << n) /
                         (static_cast<double>(target) * static_cast<double>(target));
    return choice;
}

FactorResult run_factor(const FactorJob& job, const TransformSpec& spec, int threads) {
    validate_target(job.target);
    if (job.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
    if (job.base != 0 && (job.base < 2 || job.base >= job.target))
        throw std::invalid_argument("base must lie in [2, target) when given");

    const WidthChoice width = choose_n(job.target, job.c_min);
    FactorResult result;
    result.target = job.target;
    result.spec = spec;
    result.seed = job.seed;
    result.c_min = job.c_min;
    result.n = width.n;
    result.effective_c = width.effective_c;
    result.max_attempts = job.max_attempts;

    Xoshiro256ss rng(job.seed);
    const std::uint64_t modulus = std::uint64_t{1} << width.n;

    std::uint64_t base = job.base;
    bool need_new_base = base == 0;

    for (int attempt = 1; attempt <= job.max_attempts; ++attempt) {
        AttemptRecord record;
        record.attempt = attempt;
        if (need_new_base) {
            base = draw_coprime_base(rng, job.target);
            need_new_base = false;
        }
        record.base = base;
        result.attempts_used = attempt;

        const std::uint64_t shared = gcd_u64(base, job.target);
        if (shared != 1) {
            record.outcome = "gcd-factor";
            record.factor1 = std::min(shared, job.target / shared);
            record.factor2 = std::max(shared, job.target / shared);
            result.success = true;
            result.factor1 = record.factor1;
            result.factor2 = record.factor2;
            result.transcript.push_back(std::move(record));
            return result;
        }

        const std::uint64_t order = multiplicative_order(base, job.target);
        record.order = order;
        record.x0 = rng.uniform_below(order);

        const PeriodicState state(width.n, record.x0, order);
        const DistributionResult dist = full_distribution(state, spec, threads);
        record.y = sample_outcome(dist, rng.uniform_double());

        record.recovered = best_approx(record.y, modulus, job.target);
        const std::uint64_t k_near = static_cast<std::uint64_t>(
            (static_cast<uint128_t>(record.y) * order + modulus / 2) / modulus);
        record.window_hit = k_near < order && success_window(record.y, k_near, order, width.n);

        for (int multiple = 1; multiple <= kPeriodMultipleCap; ++multiple) {
            const std::uint64_t candidate = record.recovered.den * static_cast<std::uint64_t>(multiple);
            record.candidates.push_back(candidate);
            if (mod_pow(base, candidate, job.target) == 1) {
                record.period_found = candidate;
                break;
            }
        }

        if (record.period_found == 0) {
            record.outcome = "no-period";
            result.transcript.push_back(std::move(record));
            continue;
        }
        if (record.period_found & 1) {
            record.outcome = "odd-period";
            need_new_base = true;
            result.transcript.push_back(std::move(record));
            continue;
        }
        const std::uint64_t root = mod_pow(base, record.period_found / 2, job.target);
        if (root == job.target - 1) {
            record.outcome = "self-inverse-root";
            need_new_base = true;
            result.transcript.push_back(std::move(record));
            continue;
        }
        const std::uint64_t f1 = gcd_u64(root >= 1 ? root - 1 : 0, job.target);
        const std::uint64_t f2 = gcd_u64(root + 1, job.target);
        std::uint64_t split = 0;
        if (f1 > 1 && f1 < job.target) split = f1;
        else if (f2 > 1 && f2 < job.target) split = f2;
        if (split == 0) {
            record.outcome = "trivial-factors";
            result.transcript.push_back(std::move(record));
            continue;
        }
        record.outcome = "factored";
        record.factor1 = std::min(split, job.target / split);
        record.factor2 = std::max(split, job.target / split);
        result.success = true;
        result.factor1 = record.factor1;
        result.factor2 = record.factor2;
        result.transcript.push_back(std::move(record));
        return result;
    }
    return result;
}

}  // namespace qift
