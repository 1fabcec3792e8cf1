///
/// \file quadrature.hpp
///
/// Composite Gauss-Legendre quadrature along straight segments of the complex
/// plane, refined by panel doubling.
///

#ifndef LIGHTNING_QUADRATURE_HPP
#define LIGHTNING_QUADRATURE_HPP

#include <cmath>
#include <algorithm>
#include <complex>
#include <string>

#include <lightning/core.hpp>

namespace lightning::quad
{

/// Nodes and weights of the fixed per-panel Gauss-Legendre rule on [-1,1].
struct GaussRule
{
    static constexpr int order = 16;
    double nodes[order];
    double weights[order];
};

const GaussRule& gauss_rule();

///
/// Composite rule with `panels` equal panels on the segment a -> b.
/// `F` maps a point of the segment (double or Complex) to double or Complex.
///
template <typename Point, typename F>
auto composite(F&& f, Point a, Point b, long panels)
{
    using Value = decltype(f(a));
    const auto& g    = gauss_rule();
    const Point step = (b - a) / static_cast<double>(panels);
    const Point half = step / 2.0;
    Value sum{};
    for (long p = 0; p < panels; ++p)
    {
        const Point mid = a + (static_cast<double>(p) + 0.5) * step;
        Value panel{};
        for (int k = 0; k < GaussRule::order; ++k)
        {
            panel += g.weights[k] * f(mid + g.nodes[k] * half);
        }
        sum += panel;
    }
    return sum * half;
}

struct Options
{
    double abs_tol   = 1e-13;
    double rel_tol   = 0.0; ///< also accept |change| <= rel_tol * |estimate|
    long min_panels  = 8;
    long max_panels  = 1L << 20;
};

///
/// Doubles the panel count until two successive composite estimates agree to
/// abs_tol (or rel_tol relative to the newer estimate). Throws NumericError if max_panels is exceeded.
///
template <typename Point, typename F>
auto integrate(F&& f, Point a, Point b, const Options& opt = {})
{
    long panels = opt.min_panels < 1 ? 1 : opt.min_panels;
    auto prev   = composite(f, a, b, panels);
    while (true)
    {
        panels *= 2;
        if (panels > opt.max_panels)
        {
            throw NumericError("quadrature did not converge within " +
                               std::to_string(opt.max_panels) + " panels");
        }
        auto next = composite(f, a, b, panels);
        using std::abs;
        if (!std::isfinite(abs(next)))
        {
            throw NumericError("quadrature produced a non-finite value");
        }
        if (abs(next - prev) <= std::max(opt.abs_tol, opt.rel_tol * abs(next)))
        {
            return next;
        }
        prev = next;
    }
}

} // namespace lightning::quad

#endif /* LIGHTNING_QUADRATURE_HPP */
