#include <doctest.h>

#include <cmath>
#include <numbers>

#include <lightning/asymptotics.hpp>
#include <lightning/core.hpp>
#include <lightning/quadrature.hpp>

using namespace lightning;
using std::numbers::pi;

TEST_CASE("F1")
{
    CHECK(F1(1.0) == doctest::Approx(0.28054992616959006).epsilon(1e-14));
    CHECK(std::abs(F1(1.0) - 0.28) < 0.005);
    CHECK(F1(10.0) == doctest::Approx(0.031778174291670337).epsilon(1e-13));
    // Independent quadrature of (1/pi) int_0^1 dt / sqrt(t^2 + y^2).
    const double y = 10.0;
    const double q = quad::integrate([y](double t) { return 1.0 / std::sqrt(t * t + y * y); }, 0.0,
                                     1.0) / pi;
    CHECK(std::abs(F1(y) - q) < 1e-12);
    for (double yy : {10.0, 20.0, 50.0})
    {
        const double y3 = yy * yy * yy;
        const double expansion = 1.0 / (pi * yy) - 1.0 / (6.0 * pi * y3);
        CHECK(std::abs(F1(yy) - expansion) * std::pow(yy, 5) < 0.03);
        // A cubic coefficient of 1/4 leaves an O(y^-3) remainder.
        const double quarter = 1.0 / (pi * yy) - 1.0 / (4.0 * pi * y3);
        CHECK(std::abs(F1(yy) - quarter) * y3 == doctest::Approx(1.0 / (12.0 * pi)).epsilon(0.05));
    }
}

TEST_CASE("F2 against extended-precision values")
{
    CHECK(F2(1.0) == doctest::Approx(-0.096782177649972393).epsilon(1e-12));
    CHECK(F2(0.5) == doctest::Approx(-0.17766334021278734).epsilon(1e-12));
    CHECK(F2(1e-3) == doctest::Approx(-3.0101840763629194).epsilon(1e-12));
}

TEST_CASE("H and its derivative")
{
    CHECK(H(100, 0.5) == doctest::Approx(46.082428902262291).epsilon(1e-13));
    CHECK(std::abs(H(50, 1e8) - 25.5) < 1e-6);
    const int n = 2500;
    CHECK(H(2 * n, 1.0) == doctest::Approx(n - 0.4 * std::sqrt(double(n))).epsilon(0.02));
    double prev = H(200, 0.1);
    for (int k = 1; k < 50; ++k)
    {
        const double y   = 0.1 * std::pow(1000.0, k / 49.0);
        const double cur = H(200, y);
        CHECK(cur > prev);
        prev = cur;
    }
    for (double y : {0.3, 1.0, 4.0})
    {
        const double d = (H(200, y * (1 + 1e-6)) - H(200, y * (1 - 1e-6))) / (2e-6 * y);
        CHECK(H_derivative(200, y) == doctest::Approx(d).epsilon(1e-6));
    }
}

TEST_CASE("invert_H")
{
    CHECK(invert_H(200, 99.0) == doctest::Approx(2.8765682400194799).epsilon(1e-12));
    for (double y0 : {0.5, 1.0, 5.0})
    {
        CHECK(std::abs(invert_H(400, H(400, y0)) - y0) < 1e-9 * y0);
    }
    const int n = 20000;
    CHECK(invert_H(n, 1e4) == doctest::Approx(2.0 * std::sqrt(double(n)) / pi).epsilon(0.01));
    CHECK_THROWS_AS(invert_H(100, 60.0), InputError);
    CHECK(monotone_lower_bound(400) >= 0.0);
}

TEST_CASE("large poles")
{
    CHECK(large_pole_estimate(100, 0) == doctest::Approx(-800.0 / (pi * pi)).epsilon(1e-15));
    CHECK(large_pole_estimate(400, 3) == doctest::Approx(4.0 * large_pole_estimate(100, 3)));
    const int n = 10000;
    for (int k : {0, 1, 2})
    {
        CHECK(stahl_pole(n, n - k) ==
              doctest::Approx(large_pole_estimate(n, k)).epsilon(0.03));
    }
    CHECK_THROWS_AS(large_pole_estimate(10, 10), InputError);
}

TEST_CASE("count of large poles")
{
    CHECK(count_large_poles(10000) == doctest::Approx(39.078968873530504).epsilon(1e-10));
    CHECK(count_large_poles(10000) == doctest::Approx(40.0).epsilon(0.05));
    CHECK(count_large_poles(40000) / count_large_poles(10000) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::abs(count_large_poles(100) - 4.0) <= 1.0);
    CHECK_THROWS_AS(count_large_poles(2), InputError);
}
