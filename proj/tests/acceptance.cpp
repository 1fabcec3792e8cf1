// One line per acceptance criterion; the exit status is non-zero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <lightning/asymptotics.hpp>
#include <lightning/experiments.hpp>
#include <lightning/poles.hpp>
#include <lightning/reference.hpp>
#include <lightning/verify.hpp>

using namespace lightning;
using std::numbers::pi;

namespace
{

struct Outcome
{
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

std::size_t find_row(const ResultTable& t, const std::function<bool(std::size_t)>& pred)
{
    for (std::size_t r = 0; r < t.size(); ++r)
    {
        if (pred(r))
        {
            return r;
        }
    }
    throw std::runtime_error("row not found");
}

Outcome best_rate()
{
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::Convergence);
    cfg.n1_list          = {9, 16, 25, 36, 49, 64};
    const ResultTable t  = run_convergence(cfg);
    const double slope   = convergence_slope(t, "tapered+poly");
    const double target  = -pi * std::sqrt(2.0);
    const double last    = t.number(
        find_row(t,
                 [&](std::size_t r) {
                     return t.text(r, "variant") == "tapered+poly" && t.number(r, "N1") == 64;
                 }),
        "max_err");
    const bool ok = std::abs(slope / target - 1.0) <= 0.15 && last <= 1e-11;
    return {ok, fmt("slope %.4f vs %.4f (%.1f%%), max_err at N1=64 %.3e", slope, target,
                    100 * (slope / target - 1.0), last)};
}

Outcome trapezoid_bound()
{
    const SampleGrid g = build_validation_grid(Domain::unit_interval(), kDefaultValidationPoints);
    const VectorXc exact = eval_target(Target::sqrt(), g);
    bool ok = true;
    double worst = 0.0;
    for (int nt : {8, 16, 32, 64, 128})
    {
        const TrapApproximant ta = TrapApproximant::make(nt, 2.0 * pi * pi, 0.0);
        const double err         = (trap_eval(ta, g.points()) - exact).cwiseAbs().maxCoeff();
        const double bound       = 20.0 * std::exp(-pi * std::sqrt(nt / 2.0));
        ok                       = ok && err <= bound;
        worst                    = std::max(worst, err / bound);
    }
    return {ok, fmt("max err/bound over Nt in {8..128}: %.4f", worst)};
}

Outcome partial_fractions()
{
    const PartialFractionForm pf = trap_partial_fractions(16, 2.0 * pi * pi);
    const TrapApproximant ta     = TrapApproximant::make(64, 2.0 * pi * pi, 0.0);
    const Eigen::VectorXd x      = log_radii(16, 100);
    double worst = 0.0, literal = 0.0;
    for (Index i = 0; i < x.size(); ++i)
    {
        const Complex z = x(i);
        const Complex a = trap_eval(ta, z);
        worst           = std::max(worst, std::abs(pf.eval(z) - a) / std::abs(a));
        Complex s       = pf.constant;
        for (Index j = 0; j < pf.poles.size(); ++j)
        {
            s += pf.residues(j) / (z - pf.poles(j));
        }
        literal = std::max(literal, std::abs(s - a) / std::abs(a));
    }
    return {worst <= 1e-13,
            fmt("max rel diff %.3e (unpaired summation order: %.3e)", worst, literal)};
}

Outcome tail_rate()
{
    const int n1                 = 400;
    const double h               = 2.0 * pi * pi;
    const PartialFractionForm pf = trap_partial_fractions(n1, h);
    std::vector<int> degrees;
    for (int d = 1; d <= 20; ++d)
    {
        degrees.push_back(d);
    }
    const auto errs = polynomial_tail_errors(pf, degrees);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& e : errs)
    {
        if (e.max_err < 1e-13 || e.max_err > 1e-2)
        {
            continue;
        }
        sx += e.degree;
        sy += std::log(e.max_err);
        sxx += double(e.degree) * e.degree;
        sxy += e.degree * std::log(e.max_err);
        ++n;
    }
    const double slope  = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double factor = std::exp(slope);
    const double target = 1.0 / (3.0 + 2.0 * std::sqrt(2.0));
    // Ellipse parameter set by the nearest tail pole after mapping [0,1] to [-1,1].
    const double x_near = 1.0 + 2.0 * std::abs(pf.poles(n1));
    const double local  = 1.0 / (x_near + std::sqrt(x_near * x_near - 1.0));
    return {n >= 3 && std::abs(factor / target - 1.0) <= 0.2,
            fmt("N1=%.0f: per-degree factor %.4f vs %.4f (%.1f%%)", n1, factor, target,
                100 * (factor / target - 1.0)) +
                fmt("; nearest-pole prediction %.4f", local)};
}

Outcome contour_identity()
{
    const double h = 2.0 * pi * pi;
    double worst   = 0.0;
    bool ok        = true;
    for (int nt : {16, 64, 144})
    {
        for (double x : {0.1, 0.5, 1.0})
        {
            const ContourSetup s = make_contour_setup(Complex(x), nt, h, 0.0);
            const ContourTerms c = contour_terms(s);
            const Complex ims =
                truncated_integral_I(Complex(x), s.t) - trapezoid_sum_S(Complex(x), nt, h);
            const double res = std::abs(ims - c.error_estimate());
            const double tol = std::max(1e-10, 1e-3 * std::abs(ims));
            ok               = ok && res <= tol;
            worst            = std::max(worst, res / tol);
        }
    }
    return {ok, fmt("max residual/tolerance %.3e", worst)};
}

Outcome conjecture_bound()
{
    const double h = 2.0 * pi * pi;
    double worst   = 0.0;
    bool ok        = true;
    for (int nt : {16, 64, 144})
    {
        for (double x : {contour_regime_min_radius(nt, h, 0.0), 0.5, 1.0})
        {
            const ContourSetup s    = make_contour_setup(Complex(x), nt, h, 0.0);
            const ConjectureCheck c = check_conjecture_bound(s);
            ok                      = ok && c.lhs < 12.0 * std::exp(-s.t);
            worst                   = std::max(worst, c.ratio);
        }
    }
    return {ok, fmt("max |int fδ| e^T = %.4f (< 12 required)", worst)};
}

Outcome delta_bound()
{
    const double h = 2.0 * pi * pi;
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> re(0.0, h);
    std::uniform_real_distribution<double> im(h / (2.0 * pi), 2.0 * h);
    std::bernoulli_distribution sign;
    int violations = 0;
    double worst   = 0.0;
    for (int k = 0; k < 1000; ++k)
    {
        const double y    = im(rng);
        const Complex u(re(rng), sign(rng) ? y : -y);
        const double lhs  = std::abs(delta(u, h));
        const double rhs  = 1.5 * std::exp(-2.0 * pi * std::abs(u.imag()) / h);
        violations += lhs > rhs;
        worst = std::max(worst, lhs / rhs);
    }
    return {violations == 0,
            fmt("%.0f of 1000 samples exceed the bound; max |δ|/bound %.4f", violations, worst)};
}

Outcome stahl_asymptotics()
{
    const int n  = 10000;
    double worst = 0.0;
    for (int k : {0, 1, 2})
    {
        worst = std::max(worst, std::abs(stahl_pole(n, n - k) / large_pole_estimate(n, k) - 1.0));
    }
    const double count = count_large_poles(n);
    const double cdev  = std::abs(count / (0.4 * std::sqrt(double(n))) - 1.0);
    const double f1    = F1(1.0);
    const bool ok      = worst <= 0.03 && cdev <= 0.05 && std::abs(f1 - 0.2805) <= 0.005;
    return {ok, fmt("pole dev %.3f%%, count %.3f (%.2f%% from 40), F1(1) %.5f", 100 * worst, count,
                    100 * cdev, f1)};
}

Outcome optimal_sigma()
{
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::OptimalSigmaVsAlpha);
    cfg.alpha_list       = {0.25, pi / 10.0, 0.75};
    const ResultTable t  = run_optimal_sigma(cfg);
    bool ok              = true;
    std::string detail;
    for (std::size_t r = 0; r < t.size(); ++r)
    {
        const double dev = t.number(r, "rel_dev");
        ok               = ok && std::abs(dev) <= 0.3;
        detail += fmt("a=%.3f: %.3f vs %.3f; ", t.number(r, "alpha"), t.number(r, "argmin_sigma"),
                      t.number(r, "predicted_sigma"));
    }
    return {ok, detail};
}

Outcome vdomain_rule()
{
    ExperimentConfig vc = ExperimentConfig::defaults(ExperimentKind::VShapeAngle);
    vc.beta_list        = {0.5, 1.0, 1.5};
    const ResultTable v = run_vshape(vc);
    bool ok             = true;
    std::string detail;
    for (double beta : vc.beta_list)
    {
        auto err = [&](const std::string& rule) {
            return v.number(find_row(v, [&](std::size_t r) {
                                return v.number(r, "beta") == beta && v.text(r, "rule") == rule;
                            }),
                            "max_err");
        };
        const double tuned = err("2sqrt(2-beta)pi"), fixed = err("2sqrt2pi");
        ok                 = ok && tuned <= fixed;
        detail += fmt("b=%.1f: %.2e<=%.2e; ", beta, tuned, fixed);
    }
    ExperimentConfig cc = ExperimentConfig::defaults(ExperimentKind::CornerSigma);
    cc.beta_list        = {1.0};
    const ResultTable c = run_corner_sigma(cc);
    const double dev    = c.number(0, "rel_dev");
    ok                  = ok && std::abs(dev) <= 0.3;
    double rule_dev     = 0.0;
    for (int k = 0; k <= 110; ++k)
    {
        rule_dev = std::max(rule_dev, std::abs(sigma_rule::corner(0.45 + 0.01 * k) - 4.0));
    }
    ok = ok && rule_dev <= 1.1;
    detail += fmt("corner argmin %.3f vs %.3f; max |rule-4| %.3f", c.number(0, "argmin_sigma"),
                  c.number(0, "rule_sigma"), rule_dev);
    return {ok, detail};
}

Outcome coefficient_floor()
{
    const Domain d      = Domain::unit_interval();
    const SampleGrid g  = build_fit_grid(d, kDefaultDecades, kDefaultFitPoints);
    const SampleGrid vg = build_validation_grid(d, kDefaultValidationPoints);
    const ApproxProblem p{};
    const FitResult poly =
        fit(p, BasisSpec{tapered_poles(49, sigma_rule::sqrt_interval()), std::nullopt, 10}, g, vg);
    const FitResult light =
        fit(p, BasisSpec{tapered_poles(59, std::sqrt(2.0) * pi), std::nullopt, 0}, g, vg);
    bool ok = poly.report.coeff_2norm * 1e2 <= light.report.coeff_2norm;
    std::string detail = fmt("N=59: |c| %.3f (+poly) vs %.1f (lightning); ", poly.report.coeff_2norm,
                             light.report.coeff_2norm);
    for (int n1 : {64, 81})
    {
        const FitResult r = fit(
            p, BasisSpec{tapered_poles(n1, sigma_rule::sqrt_interval()), std::nullopt,
                         default_poly_degree(n1)},
            g, vg);
        const double cap = 1e2 * kDefaultTsvdEps * r.report.coeff_2norm;
        ok               = ok && r.report.max_err <= cap;
        detail += fmt("N1=%.0f: err %.2e <= %.2e; ", n1, r.report.max_err, cap);
    }
    return {ok, detail};
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"best-rate convergence of tapered lightning + polynomial", best_rate},
        {"trapezoidal approximation error bound", trapezoid_bound},
        {"partial-fraction form of the trapezoidal approximation", partial_fractions},
        {"geometric decay of the polynomial tail fit", tail_rate},
        {"contour-integral identity for the quadrature error", contour_identity},
        {"conjectured bound on the contour integral", conjecture_bound},
        {"decay bound on delta off the real axis", delta_bound},
        {"asymptotics of the best-approximation poles", stahl_asymptotics},
        {"optimal clustering parameter for x^alpha", optimal_sigma},
        {"clustering rules on V-shaped domains", vdomain_rule},
        {"coefficient-norm floor of the achievable accuracy", coefficient_floor},
    };
    int failures = 0;
    int index    = 0;
    for (const auto& c : criteria)
    {
        ++index;
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
