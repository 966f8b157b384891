#include <doctest.h>

#include <cmath>

#include "jumphedge/bms.hpp"

using namespace jumphedge;

namespace {
const BmsParams kBms = make_bms_params(100.0, 0.2, 1.0);
}

TEST_SUITE("bms") {

TEST_CASE("bms_value closed forms") {
    // terminal slice
    CHECK(bms_value(Payoff::log_contract(), kBms, 1.0, 73.0) == std::log(73.0));
    // martingale case
    CHECK(bms_value(Payoff::power(1.0), kBms, 0.3, 112.0) == 112.0);
    // Gaussian mean of the log payoff: log(100) - sigma^2 T / 2
    CHECK(std::abs(bms_value(Payoff::log_contract(), kBms, 0.0, 100.0) - 4.5851701859880914) <=
          1e-12);
    CHECK_THROWS_AS(bms_value(Payoff::call(100.0), kBms, 0.0, 100.0), ValidationError);
}

TEST_CASE("bms_delta closed forms") {
    CHECK(bms_delta(Payoff::log_contract(), kBms, 0.4, 50.0) == 0.02);
    CHECK(bms_delta(Payoff::power(1.0), kBms, 0.4, 50.0) == 1.0);
    // finite-difference cross-check for power(2)
    const Payoff p2 = Payoff::power(2.0);
    const double h = 1e-5 * 80.0;
    const double fd =
        (bms_value(p2, kBms, 0.25, 80.0 + h) - bms_value(p2, kBms, 0.25, 80.0 - h)) / (2.0 * h);
    CHECK(std::abs(bms_delta(p2, kBms, 0.25, 80.0) - fd) <= 1e-6 * fd);
}

TEST_CASE("holding one share hedges the stock exactly for any step count") {
    for (int steps : {1, 3, 17}) {
        const ErrorStats s = bms_discrete_hedge_error(Payoff::power(1.0), kBms, steps, 500, 5);
        CHECK(s.min == 0.0);
        CHECK(s.max == 0.0);
    }
}

TEST_CASE("discrete hedge error shrinks at the square-root rate") {
    const std::size_t n = 20000;
    const ErrorStats e64 = bms_discrete_hedge_error(Payoff::log_contract(), kBms, 64, n, 9);
    const ErrorStats e256 = bms_discrete_hedge_error(Payoff::log_contract(), kBms, 256, n, 9);
    const double ratio = e64.std_dev / e256.std_dev;
    CHECK(ratio >= 1.6);
    CHECK(ratio <= 2.5);

    // strictly decreasing error std across a resolution ladder, for two payoffs
    for (const Payoff& p : {Payoff::log_contract(), Payoff::power(2.0)}) {
        double prev = 1e300;
        for (int steps : {64, 256, 1024}) {
            const ErrorStats s = bms_discrete_hedge_error(p, kBms, steps, 5000, 10);
            CHECK(s.std_dev < prev);
            prev = s.std_dev;
        }
    }
}

TEST_CASE("fine grids push the mean error into sampling noise") {
    const std::size_t n = 5000;
    const ErrorStats coarse = bms_discrete_hedge_error(Payoff::log_contract(), kBms, 64, n, 12);
    const ErrorStats fine = bms_discrete_hedge_error(Payoff::log_contract(), kBms, 4096, n, 12);
    CHECK(std::abs(fine.mean) <= 3.0 * fine.standard_error);
    CHECK(fine.std_dev <= coarse.std_dev / 6.0);
}

TEST_CASE("brownian suicide demo hits zero on nearly all paths") {
    const double frac = bms_suicide_demo(1.0, kBms, 10000, 10000, 33);
    CHECK(frac >= 0.95);
    CHECK(frac < 1.0);
}

TEST_CASE("hit fraction is non-increasing in the starting level") {
    const double small = bms_suicide_demo(0.1, kBms, 1000, 2000, 34);
    const double large = bms_suicide_demo(10.0, kBms, 1000, 2000, 34);
    CHECK(large <= small + 1e-12);
}

TEST_CASE("stopped paths stay at zero after the hit and never go negative") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto path = bms_suicide_path(1.0, kBms, 500, 35, i);
        REQUIRE(path.size() == 501);
        CHECK(path.front() == 1.0);
        bool hit = false;
        for (double v : path) {
            CHECK(v >= 0.0);
            if (hit) CHECK(v == 0.0);
            if (v == 0.0) hit = true;
        }
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(make_bms_params(0.0, 0.2, 1.0), ValidationError);
    CHECK_THROWS_AS(make_bms_params(100.0, -0.2, 1.0), ValidationError);
    CHECK_THROWS_AS(bms_discrete_hedge_error(Payoff::log_contract(), kBms, 0, 100, 1),
                    ValidationError);
    CHECK_THROWS_AS(bms_suicide_demo(1.0, kBms, 50, 100, 1), ValidationError);
    CHECK_THROWS_AS(bms_suicide_demo(-1.0, kBms, 1000, 100, 1), ValidationError);
}

} // TEST_SUITE
