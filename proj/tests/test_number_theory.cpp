#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qift/number_theory.hpp"

using qift::Fraction;

TEST_CASE("gcd, modular power, multiplicative order") {
    CHECK(qift::gcd_u64(0, 5) == 5);
    CHECK(qift::gcd_u64(12, 18) == 6);
    CHECK(qift::gcd_u64(17, 5) == 1);
    CHECK(qift::mod_pow(2, 10, 1000) == 24);
    CHECK(qift::mod_pow(7, 0, 13) == 1);
    CHECK(qift::mod_pow(0, 5, 13) == 0);
    CHECK(qift::multiplicative_order(7, 15) == 4);
    CHECK(qift::multiplicative_order(2, 15) == 4);
    CHECK(qift::multiplicative_order(4, 15) == 2);
    CHECK_THROWS_AS(qift::multiplicative_order(6, 15), std::invalid_argument);
}

TEST_CASE("modular power matches repeated multiplication") {
    const std::uint64_t modulus = 1019;
    for (std::uint64_t base : {2ULL, 3ULL, 997ULL}) {
        std::uint64_t acc = 1;
        for (std::uint64_t e = 0; e <= 40; ++e) {
            CHECK(qift::mod_pow(base, e, modulus) == acc);
            acc = acc * base % modulus;
        }
    }
}

TEST_CASE("convergent ladder of 5/8") {
    // 5/8 = [0; 1, 1, 1, 2] with convergents 0/1, 1/1, 1/2, 2/3, 5/8.
    const auto rows = qift::convergent_ladder(5, 8);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].quotient == 0);
    CHECK(rows[0].convergent == Fraction{0, 1});
    CHECK(rows[1].quotient == 1);
    CHECK(rows[1].convergent == Fraction{1, 1});
    CHECK(rows[2].quotient == 1);
    CHECK(rows[2].convergent == Fraction{1, 2});
    CHECK(rows[3].quotient == 1);
    CHECK(rows[3].convergent == Fraction{2, 3});
    CHECK(rows[4].quotient == 2);
    CHECK(rows[4].convergent == Fraction{5, 8});
}

TEST_CASE("best approximation recovers the documented fraction") {
    CHECK(qift::best_approx(23906945, std::uint64_t{1} << 25, 8192) == Fraction{508, 713});
    CHECK(qift::best_approx(23906945, std::uint64_t{1} << 25, 8192, true) == Fraction{508, 713});
}

TEST_CASE("best approximation is the exhaustive minimiser under the bound") {
    // Cross-check against brute force over all denominators.
    const std::uint64_t modulus = 1 << 12;
    for (std::uint64_t target : {1ULL, 7ULL, 100ULL, 1000ULL, 2047ULL, 2049ULL, 4095ULL}) {
        for (std::uint64_t bound : {2ULL, 3ULL, 10ULL, 50ULL}) {
            Fraction best{0, 1};
            unsigned __int128 best_err = ~static_cast<unsigned __int128>(0);
            for (std::uint64_t den = 1; den < bound; ++den) {
                // Best numerator for this denominator: round(target*den/modulus).
                const std::uint64_t num =
                    (2 * target * den + modulus) / (2 * modulus);
                const auto lhs = static_cast<unsigned __int128>(target) * den;
                const auto rhs = static_cast<unsigned __int128>(num) * modulus;
                const unsigned __int128 err = lhs > rhs ? lhs - rhs : rhs - lhs;
                // Scale errors to a common denominator before comparing.
                if (err * best.den < best_err * den) {
                    best = Fraction{num, den};
                    best_err = err;
                }
            }
            const Fraction got = qift::best_approx(target, modulus, bound);
            const auto lhs = static_cast<unsigned __int128>(target) * got.den;
            const auto rhs = static_cast<unsigned __int128>(got.num) * modulus;
            const unsigned __int128 got_err = lhs > rhs ? lhs - rhs : rhs - lhs;
            // Equal distance is fine (ties prefer small denominators); worse is not.
            CHECK(got_err * best.den <= best_err * got.den);
            CHECK(got.den < bound);
        }
    }
}

TEST_CASE("success window exact arithmetic") {
    // N = 16, r = 3: peak k=1 sits at 16/3 = 5.33; |2(y*3 - 16)| <= 3.
    CHECK(qift::success_window(5, 1, 3, 4));
    CHECK_FALSE(qift::success_window(6, 1, 3, 4));
    CHECK_FALSE(qift::success_window(4, 1, 3, 4));
    // Exact peak: y*r == k*N.
    CHECK(qift::success_window(8, 1, 2, 4));
    // Large-width regression: no overflow near the top of the range.
    // 2^61 = 3k + 2, so the closest outcome to the k=1 peak is k+1.
    CHECK(qift::success_window((std::uint64_t{1} << 61) / 3 + 1, 1, 3, 61));
    CHECK_FALSE(qift::success_window((std::uint64_t{1} << 61) / 3 - 1, 1, 3, 61));
}
