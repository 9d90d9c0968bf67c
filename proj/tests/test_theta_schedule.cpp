#include "theta_checks.hpp"

#include <arbk/errors.hpp>
#include <arbk/theta_schedule.hpp>

#include <doctest.h>

#include <cmath>

using namespace arbk;
using doctest::Approx;

TEST_CASE("first step from theta0 = 1 is the golden ratio conjugate")
{
    ThetaSchedule s(1.0);
    s.advance();
    const double t1 = s.theta();
    CHECK(t1 == Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-15));
    CHECK(t1 == Approx(0.6180339887).epsilon(1e-10));
    CHECK((1.0 - t1) / (t1 * t1) == Approx(1.0).epsilon(1e-15));
    CHECK(s.k() == 1);
}

TEST_CASE("rationalized recurrence equals the direct formula")
{
    for (double t : {1.0, 0.5, 0.1, 1e-3}) {
        const double direct = (std::sqrt(t * t * t * t + 4 * t * t) - t * t) / 2;
        CHECK(ThetaSchedule::next(t) == Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("theta decreases from 1/m")
{
    for (int m : {2, 10, 1000}) {
        ThetaSchedule s(1.0 / m);
        s.advance();
        CHECK(s.theta() <= 1.0 / m);
    }
}

TEST_CASE("bounds after 1e4 steps from 0.01")
{
    const auto r = test::check_theta_sequence(0.01, 10000, 1e-10);
    CHECK_MESSAGE(r.ok, r.detail);
    ThetaSchedule s(0.01);
    for (int k = 0; k < 10000; ++k) s.advance();
    const double lower = (2.0 - 0.01) / (10000 + (2.0 - 0.01) / 0.01);
    const double upper = 2.0 / (10000 + 2.0 / 0.01);
    CHECK(s.theta() >= lower);
    CHECK(s.theta() <= upper);
}

TEST_CASE("sequence properties for several starting points")
{
    for (double theta0 : {1.0, 0.5, 0.1, 0.01, 0.001}) {
        const auto r = test::check_theta_sequence(theta0, 20000, 1e-10);
        CHECK_MESSAGE(r.ok, "theta0=", theta0, ": ", r.detail);
    }
}

TEST_CASE("constant schedule holds theta0")
{
    auto s = ThetaSchedule::constant(0.25);
    for (int k = 0; k < 10; ++k) s.advance();
    CHECK(s.theta() == 0.25);
    CHECK(s.k() == 10);
}

TEST_CASE("theta0 outside (0, 1] is rejected")
{
    CHECK_THROWS_AS(ThetaSchedule(0.0), InvalidArgument);
    CHECK_THROWS_AS(ThetaSchedule(1.5), InvalidArgument);
    CHECK_THROWS_AS(ThetaSchedule(-0.1), InvalidArgument);
    CHECK_NOTHROW(ThetaSchedule(1.0));
}
