#include <lightning/quadrature.hpp>

#include <numbers>

namespace lightning::quad
{

namespace
{

GaussRule make_rule()
{
    // Newton iteration on P_n from the Chebyshev-like initial guesses.
    constexpr int n = GaussRule::order;
    GaussRule rule{};
    for (int i = 0; i < n; ++i)
    {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it)
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
            {
                break;
            }
        }
        rule.nodes[i]   = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussRule& gauss_rule()
{
    static const GaussRule rule = make_rule();
    return rule;
}

} // namespace lightning::quad
