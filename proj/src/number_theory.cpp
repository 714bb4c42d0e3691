#include "qift/number_theory.hpp"

#include <numeric>
#include <stdexcept>

#include "qift/bitops.hpp"

namespace qift {

namespace {

using u128 = unsigned __int128;

/// |a/b - c/d| comparison helper: returns the cross-multiplied distance
/// |target*q - modulus*p| as a 128-bit magnitude, so two candidate fractions
/// p1/q1, p2/q2 can be ranked by err1*q2 vs err2*q1 without rounding.
u128 cross_error(std::uint64_t target, std::uint64_t modulus, const Fraction& f) {
    const u128 lhs = static_cast<u128>(target) * f.den;
    const u128 rhs = static_cast<u128>(modulus) * f.num;
    return lhs >= rhs ? lhs - rhs : rhs - lhs;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (modulus >> kMaxWidth) throw std::invalid_argument("mod_pow: modulus exceeds 62 bits");
    if (modulus == 1) return 0;
    u128 acc = 1;
    u128 cur = base % modulus;
    while (exponent != 0) {
        if (exponent & 1) acc = acc * cur % modulus;
        cur = cur * cur % modulus;
        exponent >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    if (modulus >> kMaxWidth)
        throw std::invalid_argument("multiplicative_order: modulus exceeds 62 bits");
    base %= modulus;
    if (std::gcd(base, modulus) != 1)
        throw std::invalid_argument("multiplicative_order: base shares a factor with modulus");
    std::uint64_t value = base;
    std::uint64_t t = 1;
    while (value != 1) {
        value = static_cast<std::uint64_t>(static_cast<u128>(value) * base % modulus);
        ++t;
    }
    return t;
}

std::vector<ConvergentRow> convergent_ladder(std::uint64_t target, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("convergent_ladder: modulus must be positive");
    std::vector<ConvergentRow> rows;
    // Standard recurrence: p(-1)=1, p(-2)=0; q(-1)=0, q(-2)=1.
    std::uint64_t p_prev2 = 0, p_prev1 = 1;
    std::uint64_t q_prev2 = 1, q_prev1 = 0;
    std::uint64_t num = target, den = modulus;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t rem = num % den;
        const std::uint64_t p = a * p_prev1 + p_prev2;
        const std::uint64_t q = a * q_prev1 + q_prev2;
        rows.push_back({a, Fraction{p, q}});
        p_prev2 = p_prev1;
        p_prev1 = p;
        q_prev2 = q_prev1;
        q_prev1 = q;
        num = den;
        den = rem;
    }
    return rows;
}

Fraction best_approx(std::uint64_t target, std::uint64_t modulus, std::uint64_t bound,
                     bool convergents_only) {
    if (modulus == 0) throw std::invalid_argument("best_approx: modulus must be positive");
    if (bound < 2) throw std::invalid_argument("best_approx: denominator bound must be >= 2");

    Fraction last{target / modulus, 1};  // convergent from the integer part
    std::uint64_t p_prev = 1, q_prev = 0;  // p(-1)/q(-1)
    std::uint64_t p_cur = last.num, q_cur = 1;
    std::uint64_t num = modulus, den = target % modulus;

    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t rem = num % den;
        const std::uint64_t p_next = a * p_cur + p_prev;
        const std::uint64_t q_next = a * q_cur + q_prev;
        if (q_next >= bound) {
            if (convergents_only) return last;
            // Largest semiconvergent p_prev + t*p_cur over q_prev + t*q_cur
            // whose denominator stays below the bound.
            const std::uint64_t t = (bound - 1 - q_prev) / q_cur;
            if (t == 0) return last;
            const Fraction semi{p_prev + t * p_cur, q_prev + t * q_cur};
            const u128 err_last = cross_error(target, modulus, last);
            const u128 err_semi = cross_error(target, modulus, semi);
            // Compare err_last/q_last vs err_semi/q_semi exactly.
            const u128 lhs = err_last * semi.den;
            const u128 rhs = err_semi * last.den;
            return rhs < lhs ? semi : last;
        }
        last = Fraction{p_next, q_next};
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        num = den;
        den = rem;
    }
    return last;  // target/modulus itself has denominator below the bound
}

bool success_window(std::uint64_t y, std::uint64_t k, std::uint64_t r, int n) {
    detail::check_width(n);
    if (r == 0) throw std::invalid_argument("success_window: r must be positive");
    const u128 lhs = static_cast<u128>(y) * r;
    const u128 rhs = static_cast<u128>(k) << n;
    const u128 gap = lhs >= rhs ? lhs - rhs : rhs - lhs;
    return 2 * gap <= r;
}

}  // namespace qift
