#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qift/errors.hpp"
#include "qift/periodic_state.hpp"
#include "qift/rng.hpp"
#include "qift/scan.hpp"

using qift::PeriodicState;
using qift::ScanReport;
using qift::TransformSpec;

TEST_CASE("peak scan window structure") {
    const PeriodicState state(12, 3, 9);
    const ScanReport report = qift::peak_scan(state, TransformSpec::integral(), 2);
    CHECK_FALSE(report.full_mode);
    CHECK(report.row_count == 8);
    REQUIRE(report.rows.size() == 8);
    CHECK(report.recovery_bound == 64);

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        CHECK(row.k == i + 1);
        CHECK(row.ys.size() >= 1);
        CHECK(row.ys.size() <= 4);
        double rp_sum = 0.0;
        for (std::size_t c = 0; c < row.ys.size(); ++c) {
            CHECK(row.ys[c] < state.modulus());
            if (c > 0) CHECK(row.ys[c] > row.ys[c - 1]);
            rp_sum += row.rp_values[c];
        }
        CHECK(row.window_rp_sum == doctest::Approx(rp_sum).epsilon(1e-12));
        // Every window contains at least one outcome inside the success band.
        CHECK(row.window_hit);
        CHECK(row.recovered_valid);
        CHECK(row.recovered.den >= 1);
        CHECK(state.r % row.recovered.den == 0);
    }

    CHECK(report.min_pr_y > 0.0);
    CHECK(report.min_pr_k >= 1);
    CHECK(report.min_pr_k <= 8);
    CHECK(report.pr_total > 0.0);
    CHECK(report.pr_total < 1.0);
}

TEST_CASE("full scan accounts for all probability and matches peak windows") {
    const PeriodicState state(12, 3, 9);
    for (const TransformSpec& spec : {TransformSpec::integral(), TransformSpec::qft()}) {
        const ScanReport full = qift::full_scan(state, spec, 0.05, 2);
        CHECK(full.full_mode);
        CHECK(full.total_prob == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(full.pr_total > 0.0);
        CHECK(full.pr_total <= full.total_prob + 1e-12);
        CHECK(full.threshold_hits.size() >= 8);
        for (const auto& hit : full.threshold_hits) {
            CHECK(hit.y != 0);
            CHECK(hit.rp_value > full.threshold);
        }

        const ScanReport peak = qift::peak_scan(state, spec, 2);
        CHECK(full.min_pr_y == peak.min_pr_y);
        CHECK(full.min_pr_k == peak.min_pr_k);
        CHECK(full.row_count == peak.row_count);
    }
}

TEST_CASE("threshold hits are sorted and deduplicated") {
    const PeriodicState state(10, 2, 5);
    const ScanReport full = qift::full_scan(state, TransformSpec::qft(), 0.05, 3);
    for (std::size_t i = 1; i < full.threshold_hits.size(); ++i)
        CHECK(full.threshold_hits[i].y > full.threshold_hits[i - 1].y);
    // r = 5 has 4 non-trivial peaks; the exact transform puts > 0.4 of the
    // relative probability on each nearest outcome.
    CHECK(full.threshold_hits.size() >= 4);
}

TEST_CASE("scan guards") {
    CHECK_THROWS_AS(qift::peak_scan(PeriodicState(10, 0, 1), TransformSpec::integral()),
                    std::invalid_argument);
    CHECK_THROWS_AS(qift::full_scan(PeriodicState(10, 0, 3), TransformSpec::integral(), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(qift::full_scan(PeriodicState(28, 0, 3), TransformSpec::integral()),
                    qift::resource_limit_error);
    CHECK_THROWS_AS(qift::peak_scan(PeriodicState(31, 0, 3), TransformSpec::integral()),
                    qift::resource_limit_error);
}

TEST_CASE("random draws respect the documented constraints") {
    qift::Xoshiro256ss rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto draw = qift::draw_state(rng, 16, qift::RParity::Odd);
        CHECK((draw.r & 1) == 1);
        CHECK(draw.r >= 3);
        CHECK(draw.r * draw.r <= (std::uint64_t{1} << 16) - 1);
        CHECK(draw.x0 < draw.r);
    }
    for (int i = 0; i < 50; ++i) {
        const auto draw = qift::draw_state(rng, 16, qift::RParity::Even);
        CHECK((draw.r & 1) == 0);
    }
}

TEST_CASE("seeded runs are reproducible and thread-count independent") {
    qift::RunConfig config;
    config.n = 14;
    config.spec = TransformSpec::integral();
    config.seed = 2024;
    config.run_count = 3;

    config.threads = 1;
    const auto one = qift::random_runs(config);
    config.threads = 4;
    const auto four = qift::random_runs(config);

    REQUIRE(one.draws.size() == 3);
    REQUIRE(four.draws.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(one.draws[i].r == four.draws[i].r);
        CHECK(one.draws[i].x0 == four.draws[i].x0);
        CHECK(one.reports[i].pr_total == four.reports[i].pr_total);
        CHECK(one.reports[i].min_pr_y == four.reports[i].min_pr_y);
    }
    CHECK(one.pr_min == four.pr_min);
    CHECK(one.min_min_pr_y == four.min_min_pr_y);
}

TEST_CASE("width sub-streams do not depend on the sweep range") {
    const TransformSpec spec = TransformSpec::integral();
    const auto narrow = qift::table_reproduce(14, 14, spec, 2, 77, qift::RParity::Odd, 2, false,
                                              false);
    const auto wide = qift::table_reproduce(12, 15, spec, 2, 77, qift::RParity::Odd, 2, false,
                                            false);
    REQUIRE(narrow.rows.size() == 1);
    REQUIRE(wide.rows.size() == 4);
    CHECK(narrow.rows[0].pr_min == wide.rows[2].pr_min);
    CHECK(narrow.rows[0].min_min_pr_y == wide.rows[2].min_min_pr_y);
    REQUIRE(narrow.rows[0].run_details.size() == 2);
    CHECK(narrow.rows[0].run_details[0].r == wide.rows[2].run_details[0].r);
    CHECK(narrow.rows[0].run_details[0].x0 == wide.rows[2].run_details[0].x0);
}

TEST_CASE("power-law fit recovers exact synthetic exponents") {
    std::vector<std::pair<double, double>> points;
    for (int n = 20; n <= 30; ++n)
        points.emplace_back(n, 2.0 / std::pow(n, 1.5));
    const auto fit = qift::fit_power_law(points);
    CHECK(fit.exponent == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(fit.constant == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.points == points.size());

    CHECK_THROWS_AS(qift::fit_power_law({{2.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(qift::fit_power_law({{2.0, 1.0}, {2.0, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(qift::fit_power_law({{2.0, 1.0}, {3.0, -0.5}}), std::invalid_argument);
}

TEST_CASE("mode and parity names") {
    CHECK(std::string(qift::to_string(qift::RParity::Odd)) == "odd");
    CHECK(std::string(qift::to_string(qift::RParity::Even)) == "even");
    CHECK(std::string(qift::to_string(qift::RParity::Any)) == "any");
    CHECK(std::string(qift::to_string(qift::ScanMode::Peak)) == "peak");
    CHECK(std::string(qift::to_string(qift::ScanMode::Full)) == "full");
}
