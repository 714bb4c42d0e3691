#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qift/bitops.hpp"

namespace qift {

/// Equal superposition over x(j) = x0 + j*r for j = 0 .. A-1, where A is the
/// number of such terms below 2^n. A is always derived from (n, x0, r).
struct PeriodicState {
    int n = 1;
    std::uint64_t x0 = 0;
    std::uint64_t r = 1;

    PeriodicState() = default;
    PeriodicState(int n_, std::uint64_t x0_, std::uint64_t r_) : n(n_), x0(x0_), r(r_) {
        detail::check_width(n);
        if (r == 0) throw std::invalid_argument("period r must be positive");
        if (x0 >= r) throw std::invalid_argument("offset x0 must be below the period r");
        if (n >= 2 && r > (std::uint64_t{1} << (n - 1)))
            throw std::invalid_argument("period r=" + std::to_string(r) + " exceeds 2^(n-1)");
        if (n == 1 && r > 1) throw std::invalid_argument("period r exceeds 2^(n-1)");
    }

    std::uint64_t modulus() const { return std::uint64_t{1} << n; }

    /// A = ceil((2^n - x0) / r); satisfies x0 + (A-1)r < 2^n <= x0 + A*r.
    std::uint64_t term_count() const {
        const std::uint64_t span = modulus() - x0;
        return (span + r - 1) / r;
    }
};

}  // namespace qift
