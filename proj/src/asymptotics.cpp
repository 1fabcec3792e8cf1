#include <lightning/asymptotics.hpp>

#include <cmath>
#include <numbers>

#include <lightning/core.hpp>
#include <lightning/quadrature.hpp>

namespace lightning
{

using std::numbers::pi;

namespace
{

constexpr double kBracketLow  = 1e-12;
constexpr double kBracketHigh = 1e12;

void check_y(double y)
{
    if (!(y > 0.0) || !std::isfinite(y))
    {
        throw InputError("density: y must be positive and finite");
    }
}

} // namespace

double F1(double y)
{
    check_y(y);
    return std::asinh(1.0 / y) / pi;
}

double F2(double y)
{
    check_y(y);
    // t = y e^s; asinh(e^{-s}/y) <= e^{-s}/y bounds the neglected tail.
    const double s_max = std::max(1.0, std::log(1.0 / (y * 1e-18)));
    auto integrand     = [y](double s) { return std::asinh(std::exp(-s) / y); };
    quad::Options opt;
    opt.abs_tol    = 1e-13;
    opt.rel_tol    = 1e-15;
    opt.min_panels = std::max(4L, static_cast<long>(s_max / 4.0));
    return -quad::integrate(integrand, 0.0, s_max, opt) / (pi * pi);
}

double H(int n, double y)
{
    if (n < 1)
    {
        throw InputError("H: N must be at least 1");
    }
    return 0.5 * (n + 1) - std::sqrt(static_cast<double>(n)) * F1(y) - F2(y);
}

double H_derivative(int n, double y)
{
    check_y(y);
    return (std::sqrt(static_cast<double>(n)) / std::sqrt(1.0 + y * y) -
            std::asinh(1.0 / y) / pi) /
           (pi * y);
}

double monotone_lower_bound(int n)
{
    if (H_derivative(n, kBracketLow) > 0.0)
    {
        return kBracketLow;
    }
    double lo = std::log(kBracketLow);
    double hi = 0.0;
    if (H_derivative(n, 1.0) <= 0.0)
    {
        throw InputError("H: N too small, density is not increasing near y = 1");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        (H_derivative(n, std::exp(mid)) > 0.0 ? hi : lo) = mid;
    }
    return std::exp(hi);
}

double invert_H(int n, double j)
{
    if (n < 1)
    {
        throw InputError("invert_H: N must be at least 1");
    }
    double ylo       = monotone_lower_bound(n);
    double yhi       = kBracketHigh;
    const double hlo = H(n, ylo);
    const double hhi = H(n, yhi);
    if (!(j > hlo && j < hhi))
    {
        throw InputError("invert_H: j = " + std::to_string(j) +
                         " outside the monotone range of H_N");
    }

    // Bisection in log y, then Newton with the closed-form derivative.
    double lo = std::log(ylo);
    double hi = std::log(yhi);
    while (hi - lo > 1e-6)
    {
        const double mid = 0.5 * (lo + hi);
        (H(n, std::exp(mid)) < j ? lo : hi) = mid;
    }
    double y = std::exp(0.5 * (lo + hi));
    ylo      = std::exp(lo);
    yhi      = std::exp(hi);
    for (int it = 0; it < 50; ++it)
    {
        const double r  = H(n, y) - j;
        const double dy = r / H_derivative(n, y);
        double next     = y - dy;
        if (!(next > ylo && next < yhi))
        {
            next = 0.5 * (ylo + yhi);
        }
        (r < 0.0 ? ylo : yhi) = y;
        if (std::abs(next - y) <= 1e-14 * y)
        {
            return next;
        }
        y = next;
    }
    return y;
}

double large_pole_estimate(int n, int k)
{
    if (n < 1 || k < 0 || k >= n)
    {
        throw InputError("large_pole_estimate: need N >= 1 and 0 <= k < N");
    }
    const double odd = 2.0 * k + 1.0;
    return -8.0 * n / (odd * odd * pi * pi);
}

double count_large_poles(int n)
{
    if (n < 4)
    {
        throw InputError("count_large_poles: N must be at least 4");
    }
    return n - H(2 * n, 1.0);
}

double stahl_pole(int n, double j)
{
    const double y = invert_H(2 * n, j);
    return -y * y;
}

} // namespace lightning
