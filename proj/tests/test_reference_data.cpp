#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qift/reference_tables.hpp"

namespace {

struct CsvRow {
    int n;
    double pr_min;
};

std::vector<CsvRow> read_reference_csv(const std::string& path) {
    std::ifstream file(path);
    REQUIRE_MESSAGE(file.good(), "missing data file: ", path);
    std::string line;
    REQUIRE(static_cast<bool>(std::getline(file, line)));
    REQUIRE(line == "n,pr_min");
    std::vector<CsvRow> rows;
    while (std::getline(file, line)) {
        if (line.empty()) continue;
        std::istringstream parts(line);
        std::string n_text, pr_text;
        REQUIRE(static_cast<bool>(std::getline(parts, n_text, ',')));
        REQUIRE(static_cast<bool>(std::getline(parts, pr_text)));
        rows.push_back(CsvRow{std::stoi(n_text), std::stod(pr_text)});
    }
    return rows;
}

}  // namespace

// The bundled minimum-probability baselines exist twice: as a header the
// library compiles in, and as CSV files plotting scripts can consume. The two
// copies must never drift apart.
TEST_CASE("baseline CSV files agree with the compiled-in tables") {
    const std::string root = QIFT_SOURCE_DIR;

    const auto integral = read_reference_csv(root + "/data/reference_prmin_integral.csv");
    REQUIRE(integral.size() == qift::reference::kIntegralPrMinCount);
    for (std::size_t i = 0; i < integral.size(); ++i) {
        CHECK(integral[i].n == qift::reference::kIntegralPrMin[i].n);
        CHECK(integral[i].pr_min == qift::reference::kIntegralPrMin[i].pr_min);
    }

    const auto maqft3 = read_reference_csv(root + "/data/reference_prmin_maqft3.csv");
    REQUIRE(maqft3.size() == qift::reference::kMaqft3PrMinCount);
    for (std::size_t i = 0; i < maqft3.size(); ++i) {
        CHECK(maqft3[i].n == qift::reference::kMaqft3PrMin[i].n);
        CHECK(maqft3[i].pr_min == qift::reference::kMaqft3PrMin[i].pr_min);
    }
}

TEST_CASE("baseline tables are well-formed") {
    // Widths are consecutive and the values decrease monotonically: wider
    // registers spread the same success mass over more outcomes.
    for (std::size_t i = 1; i < qift::reference::kIntegralPrMinCount; ++i) {
        CHECK(qift::reference::kIntegralPrMin[i].n ==
              qift::reference::kIntegralPrMin[i - 1].n + 1);
        CHECK(qift::reference::kIntegralPrMin[i].pr_min <
              qift::reference::kIntegralPrMin[i - 1].pr_min);
    }
    for (std::size_t i = 1; i < qift::reference::kMaqft3PrMinCount; ++i) {
        CHECK(qift::reference::kMaqft3PrMin[i].n == qift::reference::kMaqft3PrMin[i - 1].n + 1);
        CHECK(qift::reference::kMaqft3PrMin[i].pr_min <
              qift::reference::kMaqft3PrMin[i - 1].pr_min);
    }
    CHECK(qift::reference::kIntegralPrMin[0].n == 20);
    CHECK(qift::reference::kMaqft3PrMin[0].n == 20);
}
