#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "qift/errors.hpp"
#include "qift/shor.hpp"
#include "qift/transform_spec.hpp"

using qift::FactorJob;
using qift::TransformSpec;

TEST_CASE("register width selection") {
    CHECK(qift::choose_n(15, 2).n == 9);    // 2*225 = 450 <= 512
    CHECK(qift::choose_n(21, 2).n == 10);   // 2*441 = 882 <= 1024
    CHECK(qift::choose_n(3, 2).n == 5);     // 2*9 = 18 <= 32
    CHECK(qift::choose_n(91, 2).n == 15);   // 2*8281 = 16562 <= 32768
    const auto choice = qift::choose_n(15, 2);
    CHECK(choice.effective_c == doctest::Approx(512.0 / 225.0).epsilon(1e-12));
    CHECK(choice.effective_c >= 2.0);
    CHECK(choice.effective_c < 4.0);
    CHECK_THROWS_AS(qift::choose_n(1024, 2048), qift::resource_limit_error);
    CHECK_THROWS_AS(qift::choose_n(15, 1), std::invalid_argument);
}

TEST_CASE("factoring input validation") {
    FactorJob job;
    job.target = 16;  // even
    CHECK_THROWS_AS(qift::run_factor(job, TransformSpec::integral()), std::invalid_argument);
    job.target = 17;  // prime
    CHECK_THROWS_AS(qift::run_factor(job, TransformSpec::integral()), std::invalid_argument);
    job.target = 7;  // too small
    CHECK_THROWS_AS(qift::run_factor(job, TransformSpec::integral()), std::invalid_argument);
    job.target = 2047;  // beyond the cap
    CHECK_THROWS_AS(qift::run_factor(job, TransformSpec::integral()), std::invalid_argument);
    job.target = 15;
    job.base = 1;
    CHECK_THROWS_AS(qift::run_factor(job, TransformSpec::integral()), std::invalid_argument);
}

TEST_CASE("factoring 15 with a fixed good base") {
    FactorJob job;
    job.target = 15;
    job.base = 7;  // order 4, never a dead end
    job.seed = 3;
    const auto result = qift::run_factor(job, TransformSpec::qft(), 2);
    CHECK(result.n == 9);
    CHECK(result.success);
    CHECK(result.factor1 == 3);
    CHECK(result.factor2 == 5);
    CHECK(result.attempts_used >= 1);
    REQUIRE(!result.transcript.empty());
    const auto& first = result.transcript.front();
    CHECK(first.base == 7);
    CHECK(first.order == 4);
    CHECK(first.x0 < 4);
    CHECK(first.y < (std::uint64_t{1} << 9));
}

TEST_CASE("a base sharing a factor wins immediately by gcd") {
    FactorJob job;
    job.target = 21;
    job.base = 6;  // gcd(6, 21) = 3
    const auto result = qift::run_factor(job, TransformSpec::integral());
    CHECK(result.success);
    CHECK(result.attempts_used == 1);
    CHECK(result.factor1 == 3);
    CHECK(result.factor2 == 7);
    CHECK(result.transcript.front().outcome == "gcd-factor");
}

TEST_CASE("factoring transcripts replay identically") {
    FactorJob job;
    job.target = 35;
    job.seed = 11;
    const auto a = qift::run_factor(job, TransformSpec::integral(), 1);
    const auto b = qift::run_factor(job, TransformSpec::integral(), 4);
    CHECK(a.success == b.success);
    CHECK(a.factor1 == b.factor1);
    CHECK(a.attempts_used == b.attempts_used);
    REQUIRE(a.transcript.size() == b.transcript.size());
    for (std::size_t i = 0; i < a.transcript.size(); ++i) {
        CHECK(a.transcript[i].base == b.transcript[i].base);
        CHECK(a.transcript[i].y == b.transcript[i].y);
        CHECK(a.transcript[i].outcome == b.transcript[i].outcome);
    }
}

TEST_CASE("factoring failure is a report, not an error") {
    FactorJob job;
    job.target = 15;
    job.base = 14;  // 14 = -1 mod 15: order 2, root is self-inverse, forces new bases
    job.max_attempts = 1;
    job.seed = 5;
    const auto result = qift::run_factor(job, TransformSpec::integral());
    CHECK_FALSE(result.success);
    CHECK(result.attempts_used == 1);
    CHECK(result.factor1 == 0);
}
