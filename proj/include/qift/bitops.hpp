#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "qift/transform_spec.hpp"

namespace qift {

/// Widest supported word. Keeps products like x*y and A*A inside unsigned
/// 128-bit arithmetic with headroom.
inline constexpr int kMaxWidth = 62;

namespace detail {
inline void check_width(int width) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("bit width must be in [1, " + std::to_string(kMaxWidth) + "]");
}
}  // namespace detail

/// An n-bit integer. Bit 0 is the least significant bit.
struct BitWord {
    std::uint64_t value = 0;
    int width = 1;

    BitWord() = default;
    BitWord(std::uint64_t v, int n) : value(v), width(n) {
        detail::check_width(n);
        if (v >> n) throw std::invalid_argument("value does not fit in width " + std::to_string(n));
    }
};

/// Phase class of one amplitude term: the amplitude is the unit complex
/// number at angle 2*pi*q / 2^order.
struct PhaseIndex {
    std::uint64_t q = 0;
    int order = 1;
    std::uint64_t modulus() const { return std::uint64_t{1} << order; }
};

/// Reverse the low `width` bits of v (raw kernel; width must be valid).
inline std::uint64_t reverse_bits(std::uint64_t v, int width) {
    v = ((v & 0x5555555555555555ULL) << 1) | ((v >> 1) & 0x5555555555555555ULL);
    v = ((v & 0x3333333333333333ULL) << 2) | ((v >> 2) & 0x3333333333333333ULL);
    v = ((v & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL);
    v = __builtin_bswap64(v);
    return v >> (64 - width);
}

inline BitWord bit_reverse(BitWord y) {
    detail::check_width(y.width);
    return BitWord(reverse_bits(y.value, y.width), y.width);
}

/// popcount(x & (z >> shift)). With z the bit reversal of y at width n this
/// evaluates the convolution sum over i of x_i * y_{n-1-shift-i}, i.e. the
/// term h(n - shift) of the phase exponent. Zero once the shift empties z.
inline int shifted_and_popcount(std::uint64_t x, std::uint64_t z, int shift) {
    if (shift >= 64) return 0;
    return std::popcount(x & (z >> shift));
}

/// Phase of one term under the integral transform: amplitudes are i^q with
/// q = [2*h(n) + h(n-1) + h(n-2)] mod 4. z must be the bit reversal of y.
inline unsigned integral_phase(std::uint64_t x, std::uint64_t z) {
    return (2u * static_cast<unsigned>(std::popcount(x & z)) +
            static_cast<unsigned>(std::popcount(x & (z >> 1))) +
            static_cast<unsigned>(std::popcount(x & (z >> 2)))) & 3u;
}

/// Truncated-transform phase index mod 2^m from pre-reversed z.
/// Plain:    q = sum over s in [0, m) of 2^(m-1-s) * h(n-s).
/// Modified: the next term h(n-m) enters with the same weight as the last.
inline std::uint64_t aqft_phase(std::uint64_t x, std::uint64_t z, int m, bool modified) {
    unsigned __int128 acc = 0;
    for (int s = 0; s < m; ++s)
        acc += static_cast<unsigned __int128>(shifted_and_popcount(x, z, s)) << (m - 1 - s);
    if (modified) acc += static_cast<unsigned>(shifted_and_popcount(x, z, m));
    const unsigned __int128 mask = (static_cast<unsigned __int128>(1) << m) - 1;
    return static_cast<std::uint64_t>(acc & mask);
}

/// Exact-transform phase index: x*y mod 2^n.
inline std::uint64_t qft_phase(std::uint64_t x, std::uint64_t y, int n) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(x) * y;
    const unsigned __int128 mask = (static_cast<unsigned __int128>(1) << n) - 1;
    return static_cast<std::uint64_t>(prod & mask);
}

/// Phase index of the amplitude term (x, y) under `spec`, from pre-reversed
/// z = reverse_bits(y, n). Hot-loop form: z is computed once per y.
inline std::uint64_t phase_index_raw(std::uint64_t x, std::uint64_t y, std::uint64_t z, int n,
                                     const TransformSpec& spec) {
    switch (spec.kind) {
        case TransformKind::ExactQft: return qft_phase(x, y, n);
        case TransformKind::Integral: return integral_phase(x, z);
        case TransformKind::AqftPlain: return aqft_phase(x, z, spec.m, false);
        case TransformKind::AqftModified: return aqft_phase(x, z, spec.m, true);
    }
    return 0;
}

/// Checked single-shot form of phase_index_raw.
inline PhaseIndex phase_index(BitWord x, BitWord y, const TransformSpec& spec) {
    if (x.width != y.width) throw std::invalid_argument("x and y must share a width");
    detail::check_width(x.width);
    spec.validate_for_width(x.width);
    const std::uint64_t z = reverse_bits(y.value, y.width);
    return PhaseIndex{phase_index_raw(x.value, y.value, z, x.width, spec), spec.order_for(x.width)};
}

}  // namespace qift
