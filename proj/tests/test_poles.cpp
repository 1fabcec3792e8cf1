#include <doctest.h>

#include <cmath>
#include <numbers>

#include <lightning/poles.hpp>

using namespace lightning;
using std::numbers::pi;

TEST_CASE("uniform poles")
{
    const PoleSet one = uniform_poles(1, 5.0, 2.0);
    REQUIRE(one.size() == 1);
    CHECK(one.poles(0) == -2.0);

    // mpmath, 40 digits
    const PoleSet p = uniform_poles(3, 1.0, 2.0);
    REQUIRE(p.size() == 3);
    CHECK(p.poles(0) == -2.0);
    CHECK(p.poles(1) == doctest::Approx(-1.1227678275978563).epsilon(1e-14));
    CHECK(p.poles(2) == doctest::Approx(-0.63030379734440478).epsilon(1e-14));

    const int n1 = 17;
    const double s = 3.3, c = 1.5;
    const PoleSet q = uniform_poles(n1, s, c);
    CHECK(q.poles.cwiseAbs().minCoeff() ==
          doctest::Approx(c * std::exp(-s * (n1 - 1) / std::sqrt(double(n1)))).epsilon(1e-14));
}

TEST_CASE("tapered poles")
{
    CHECK(tapered_poles(1, 123.0, 1.0).poles(0) == -1.0);

    const PoleSet p = tapered_poles(4, 2.0, 1.0);
    REQUIRE(p.size() == 4);
    CHECK(p.poles(0) == doctest::Approx(-0.13533528323661269).epsilon(1e-14));
    CHECK(p.poles(1) == doctest::Approx(-0.30987915649682614).epsilon(1e-14));
    CHECK(p.poles(2) == doctest::Approx(-0.58514336999496869).epsilon(1e-14));
    CHECK(p.poles(3) == -1.0);

    const PoleSet q = tapered_poles(4, 2.0 * std::sqrt(2.0) * pi, 1.0);
    CHECK(q.poles.cwiseAbs().minCoeff() == doctest::Approx(1.3834418602077673e-4).epsilon(1e-13));
}

TEST_CASE("poles are negative, distinct and within scale")
{
    for (int n1 : {2, 9, 40})
    {
        for (const PoleSet& p : {uniform_poles(n1, 3.0, 1.0), tapered_poles(n1, 3.0, 1.0)})
        {
            for (Index i = 0; i < p.size(); ++i)
            {
                CHECK(p.poles(i) < 0.0);
                CHECK(p.poles(i) >= -1.0);
                for (Index j = 0; j < i; ++j)
                {
                    CHECK(p.poles(i) != p.poles(j));
                }
            }
        }
    }
}

TEST_CASE("big poles")
{
    const PoleSet b = big_poles(100, 2);
    REQUIRE(b.size() == 2);
    CHECK(b.poles(0) == doctest::Approx(-9.0063274348744686).epsilon(1e-14));
    CHECK(b.poles(1) == doctest::Approx(-3.2422778765548087).epsilon(1e-14));
    const PoleSet c = big_poles(37, 5);
    CHECK(c.poles(0) / c.poles(1) == doctest::Approx(25.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(big_poles(0, 1), InputError);
    CHECK_THROWS_AS(big_poles(10, 0), InputError);
}

TEST_CASE("pole constructors validate arguments")
{
    CHECK_THROWS_AS(uniform_poles(0, 1.0), InputError);
    CHECK_THROWS_AS(tapered_poles(3, 0.0), InputError);
    CHECK_THROWS_AS(tapered_poles(3, 1.0, -1.0), InputError);
}

TEST_CASE("scalar-templated generators agree across precisions")
{
    const auto d  = tapered_pole_values<double>(12, 4.0, 1.0);
    const auto ld = tapered_pole_values<long double>(12, 4.0L, 1.0L);
    for (Index i = 0; i < d.size(); ++i)
    {
        CHECK(static_cast<double>(ld(i)) == doctest::Approx(d(i)).epsilon(1e-15));
    }
}

TEST_CASE("sigma rules")
{
    CHECK(sigma_rule::sqrt_interval() == doctest::Approx(8.885765876316732));
    CHECK(sigma_rule::power_interval(pi / 10) == doctest::Approx(2.0 * std::sqrt(10.0 * pi)));
    CHECK(sigma_rule::sqrt_vshape(0.0) == doctest::Approx(sigma_rule::sqrt_interval()));
    CHECK(sigma_rule::corner(1.0) == doctest::Approx(std::sqrt(2.0) * pi));
    for (double beta = 0.45; beta <= 1.55 + 1e-12; beta += 0.01)
    {
        CHECK(std::abs(sigma_rule::corner(beta) - 4.0) <= 1.1);
    }
    CHECK(default_poly_degree(50) == 10);
    CHECK(default_poly_degree(100) == 13);
}
