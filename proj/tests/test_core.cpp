#include <doctest.h>

#include <cmath>
#include <numbers>

#include <lightning/core.hpp>

using namespace lightning;
using std::numbers::pi;

TEST_CASE("eval_target principal branch and limits")
{
    CHECK(std::abs(eval_target(Target::power(0.5), Complex(0.25)) - 0.5) < 1e-15);
    CHECK(eval_target(Target::power_log(1.0), Complex(0.0)) == Complex(0.0));
    CHECK(eval_target(Target::sqrt(), Complex(0.0)) == Complex(0.0));

    const Complex z     = std::polar(1.0, pi / 4);
    const Complex got   = eval_target(Target::power(pi / 10), z);
    const Complex exact = std::polar(1.0, pi * pi / 40);
    CHECK(std::abs(got - exact) < 1e-15);

    // mpmath: (-0.25i)^0.5 log(-0.25i)
    const Complex pl = eval_target(Target::power_log(0.5), Complex(0.0, -0.25));
    CHECK(std::abs(pl - Complex(-1.045489439004069377, -0.06523129553552218502)) < 1e-14);
}

TEST_CASE("eval_target rejects points outside the disc or on the cut")
{
    CHECK_THROWS_AS(eval_target(Target::sqrt(), Complex(1.5)), InputError);
    CHECK_THROWS_AS(eval_target(Target::sqrt(), Complex(-0.5)), InputError);
    CHECK_THROWS_AS(eval_target(Target::sqrt(), Domain::vshape(1.0), Complex(0.5)), InputError);
    CHECK_NOTHROW(eval_target(Target::sqrt(), Domain::vshape(1.0), Complex(0.0, 0.5)));
}

TEST_CASE("target constructors validate alpha")
{
    CHECK_THROWS_AS(Target::power(1.0), InputError);
    CHECK_THROWS_AS(Target::power(-0.5), InputError);
    CHECK_THROWS_AS(Target::power_log(0.0), InputError);
    CHECK_NOTHROW(Target::power_log(1.0));
    CHECK(Target::sqrt().alpha() == 0.5);
}

TEST_CASE("domain construction")
{
    CHECK_THROWS_AS(Domain::vshape(2.0), InputError);
    CHECK_THROWS_AS(Domain::vshape(-0.1), InputError);
    CHECK(Domain::vshape(0.0).same_set(Domain::unit_interval()));
    CHECK(Domain::vshape(0.0).single_arm());
    CHECK_FALSE(Domain::vshape(0.5).single_arm());
}

TEST_CASE("fit grid shapes")
{
    const SampleGrid g = build_fit_grid(Domain::unit_interval(), 16, 2000);
    REQUIRE(g.size() == 2000);
    CHECK(g.points()(0).real() == doctest::Approx(1e-16).epsilon(1e-12));
    CHECK(g.points()(1999) == Complex(1.0));

    const SampleGrid two = build_fit_grid(Domain::unit_interval(), 1, 2);
    CHECK(two.points()(0).real() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(two.points()(1) == Complex(1.0));

    const SampleGrid v = build_fit_grid(Domain::vshape(1.0), 16, 2000);
    REQUIRE(v.size() == 4000);
    for (Index k = 0; k < 2000; ++k)
    {
        CHECK(v.points()(2000 + k) == std::conj(v.points()(k)));
        CHECK(std::abs(v.points()(k).real()) < 1e-16 * std::abs(v.points()(k)) + 1e-300);
    }
    CHECK_THROWS_AS(build_fit_grid(Domain::unit_interval(), 0, 10), InputError);
    CHECK_THROWS_AS(build_fit_grid(Domain::unit_interval(), 16, 1), InputError);
}

TEST_CASE("validation grid shapes")
{
    CHECK(build_validation_grid(Domain::unit_interval(), 10000).size() == 10000);
    const SampleGrid g3 = build_validation_grid(Domain::unit_interval(), 3);
    CHECK(g3.points()(0).real() == doctest::Approx(1e-16).epsilon(1e-12));
    CHECK(g3.points()(1).real() == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(g3.points()(2).real() == 1.0);

    const SampleGrid v = build_validation_grid(Domain::vshape(0.5), 100);
    REQUIRE(v.size() == 200);
    for (Index k = 0; k < 100; ++k)
    {
        CHECK(std::arg(v.points()(k)) == doctest::Approx(pi / 4).epsilon(1e-14));
        CHECK(std::arg(v.points()(100 + k)) == doctest::Approx(-pi / 4).epsilon(1e-14));
    }
}

TEST_CASE("sample grids validate membership")
{
    VectorXc pts(2);
    pts << Complex(0.5), Complex(0.0, 0.5);
    CHECK_THROWS_AS(SampleGrid(Domain::unit_interval(), pts), InputError);
    CHECK_THROWS_AS(SampleGrid(Domain::unit_interval(), VectorXc()), InputError);
}
