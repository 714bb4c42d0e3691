#pragma once

#include <cstddef>

namespace qift::reference {

/// Published minimum-success-probability baselines bundled with the
/// repository. The comparison tests check seeded table runs against these
/// entries, and the power-law fit helper reports their decay exponents.
/// The same values are checked in as data/reference_prmin_*.csv for
/// diffing CLI output directly.
struct PrMinEntry {
    int n;
    double pr_min;
};

/// Integral-transform baseline, widths 20..34.
inline constexpr PrMinEntry kIntegralPrMin[] = {
    {20, 0.3630}, {21, 0.3450}, {22, 0.3270}, {23, 0.3108}, {24, 0.2951},
    {25, 0.2802}, {26, 0.2661}, {27, 0.2527}, {28, 0.2399}, {29, 0.2278},
    {30, 0.2163}, {31, 0.2054}, {32, 0.1950}, {33, 0.1852}, {34, 0.1759},
};
inline constexpr std::size_t kIntegralPrMinCount =
    sizeof(kIntegralPrMin) / sizeof(kIntegralPrMin[0]);

/// Modified truncated transform at m = 3, widths 20..31.
inline constexpr PrMinEntry kMaqft3PrMin[] = {
    {20, 0.7568}, {21, 0.7472}, {22, 0.7375}, {23, 0.7282},
    {24, 0.7188}, {25, 0.7096}, {26, 0.7006}, {27, 0.6916},
    {28, 0.6827}, {29, 0.6740}, {30, 0.6654}, {31, 0.6569},
};
inline constexpr std::size_t kMaqft3PrMinCount =
    sizeof(kMaqft3PrMin) / sizeof(kMaqft3PrMin[0]);

}  // namespace qift::reference
