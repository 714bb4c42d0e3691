#pragma once

#include <cstdint>
#include <vector>

namespace qift {

/// Reduced fraction num/den with den >= 1.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool operator==(const Fraction&) const = default;
};

/// One row of the continued-fraction expansion of target/modulus: the partial
/// quotient together with the convergent it produces.
struct ConvergentRow {
    std::uint64_t quotient;
    Fraction convergent;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// (base^exponent) mod modulus; modulus must be positive and fit in 62 bits.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Smallest t >= 1 with base^t = 1 (mod modulus); requires gcd(base, modulus) = 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus);

/// Continued-fraction ladder for target/modulus: every partial quotient with
/// its convergent, ending at the exact fraction.
std::vector<ConvergentRow> convergent_ladder(std::uint64_t target, std::uint64_t modulus);

/// Best rational approximation to target/modulus among fractions with
/// denominator < bound. Considers semiconvergents, so the result is the true
/// minimiser of |target/modulus - p/q|; ties prefer the smaller denominator.
/// With convergents_only set, returns instead the last plain convergent whose
/// denominator is below the bound.
Fraction best_approx(std::uint64_t target, std::uint64_t modulus, std::uint64_t bound,
                     bool convergents_only = false);

/// Whether |y/2^n - k/r| <= 1/2^(n+1), evaluated exactly in integers as
/// |2*(y*r - k*2^n)| <= r.
bool success_window(std::uint64_t y, std::uint64_t k, std::uint64_t r, int n);

}  // namespace qift
