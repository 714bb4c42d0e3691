#pragma once

#include <cstdint>
#include <string>

namespace qift {

using uint128_t = unsigned __int128;

/// Decimal rendering for 128-bit counts (standard library streams cannot
/// print __int128).
inline std::string u128_to_string(uint128_t v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

}  // namespace qift
