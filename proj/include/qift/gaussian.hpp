#pragma once

#include <cstdint>

namespace qift {

/// A Gaussian integer a + ib. Exact carrier for amplitude sums whose terms
/// are all in {1, i, -1, -i}.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt& operator+=(GaussianInt o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussianInt& operator-=(GaussianInt o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    /// This value rotated by i^k (k quarter turns counterclockwise).
    constexpr GaussianInt times_i_pow(unsigned k) const {
        switch (k & 3u) {
            case 0: return {re, im};
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    /// |a + ib|^2 = a^2 + b^2, exact.
    constexpr unsigned __int128 norm() const {
        const auto sq = [](std::int64_t v) {
            const unsigned __int128 a = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
            return a * a;
        };
        return sq(re) + sq(im);
    }

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    friend constexpr bool operator==(GaussianInt a, GaussianInt b) {
        return a.re == b.re && a.im == b.im;
    }
    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return a += b; }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return a -= b; }
};

}  // namespace qift
