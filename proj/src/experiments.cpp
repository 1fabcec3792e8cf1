#include <lightning/experiments.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <lightning/asymptotics.hpp>
#include <lightning/poles.hpp>
#include <lightning/reference.hpp>
#include <lightning/verify.hpp>

#ifndef LIGHTNING_VERSION
#define LIGHTNING_VERSION "unknown"
#endif

namespace lightning
{

using std::numbers::pi;

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string status_of(const std::exception& e)
{
    if (dynamic_cast<const InputError*>(&e))
    {
        return std::string("input-error: ") + e.what();
    }
    return std::string("numeric-error: ") + e.what();
}

struct Grids
{
    SampleGrid fit;
    SampleGrid validation;
};

Grids make_grids(const Domain& d, const ExperimentConfig& cfg)
{
    return Grids{build_fit_grid(d, cfg.decades, cfg.fit_points),
                 build_validation_grid(d, cfg.validation_points)};
}

void stamp(ResultTable& t, const ExperimentConfig& cfg)
{
    auto& m       = t.metadata();
    m["kind"]     = to_string(cfg.kind);
    m["version"]  = LIGHTNING_VERSION;
    if (!cfg.timestamp.empty())
    {
        m["timestamp"] = cfg.timestamp;
    }
    m["config"] = cfg.echo();
}

/// alpha = 1/beta, with the logarithmic factor when alpha is an integer.
Target corner_target(double beta)
{
    const double alpha = 1.0 / beta;
    if (std::abs(alpha - std::round(alpha)) < 1e-12)
    {
        return Target::power_log(std::round(alpha));
    }
    return Target::power(alpha);
}

std::vector<double> sweep_errors(const Target& target, const Domain& domain, int n1, int n2,
                                 std::span<const double> sigmas, const ExperimentConfig& cfg,
                                 const Grids& grids, ResultTable* out, const std::string& label)
{
    std::vector<double> errs;
    errs.reserve(sigmas.size());
    const ApproxProblem problem{target, domain};
    for (double s : sigmas)
    {
        double err = kNaN, cn = kNaN;
        std::string status = "ok";
        try
        {
            BasisSpec spec{tapered_poles(n1, s, cfg.scale_c), std::nullopt, n2};
            const FitResult r = fit(problem, spec, grids.fit, grids.validation, cfg.eps_rel);
            err = r.report.max_err;
            cn  = r.report.coeff_2norm;
        }
        catch (const std::exception& e)
        {
            status = status_of(e);
        }
        errs.push_back(err);
        if (out)
        {
            out->add_row({label, s, err, cn, status});
        }
    }
    return errs;
}

} // namespace

//------------------------------------------------------------------------------
// Configuration
//------------------------------------------------------------------------------

std::string to_string(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::Convergence: return "Convergence";
    case ExperimentKind::SigmaSweep: return "SigmaSweep";
    case ExperimentKind::N1N2Grid: return "N1N2Grid";
    case ExperimentKind::OptimalSigmaVsAlpha: return "OptimalSigmaVsAlpha";
    case ExperimentKind::VShapeAngle: return "VShapeAngle";
    case ExperimentKind::CornerSigma: return "CornerSigma";
    case ExperimentKind::CoeffNorm: return "CoeffNorm";
    case ExperimentKind::PoleLadder: return "PoleLadder";
    case ExperimentKind::VerifyBounds: return "VerifyBounds";
    }
    return "Unknown";
}

std::vector<double> geometric_grid(double lo, double hi, int n)
{
    if (!(lo > 0.0 && hi > lo) || n < 2)
    {
        throw InputError("geometric_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(n);
    const double r = std::log(hi / lo);
    for (int i = 0; i < n; ++i)
    {
        g[i] = lo * std::exp(r * i / (n - 1));
    }
    g.back() = hi;
    return g;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind)
{
    ExperimentConfig c;
    c.kind = kind;
    switch (kind)
    {
    case ExperimentKind::Convergence:
        c.n1_list = {4, 9, 16, 25, 36, 49, 64, 81};
        c.scale_c = 2.0;
        break;
    case ExperimentKind::CoeffNorm:
        c.n1_list = {4, 9, 16, 25, 36, 49, 64, 81};
        break;
    case ExperimentKind::SigmaSweep:
        c.target     = Target::power(pi / 10.0);
        c.n1         = 10;
        c.n2         = 3;
        c.sigma_grid = geometric_grid(2.0, 30.0, 48);
        break;
    case ExperimentKind::OptimalSigmaVsAlpha:
        c.target     = Target::power(pi / 10.0);
        c.n1         = 10;
        c.n2         = 10;
        c.alpha_list = {0.15, 0.25, pi / 10.0, 0.5, 0.75, 0.9};
        c.sigma_grid = geometric_grid(2.0, 40.0, 48);
        break;
    case ExperimentKind::N1N2Grid:
        c.target  = Target::power(pi / 10.0);
        c.n1_list = {4, 9, 16, 25, 36, 49, 64, 81, 100};
        for (int k = 0; k <= 16; ++k)
        {
            c.n2_list.push_back(k);
        }
        break;
    case ExperimentKind::VShapeAngle:
        c.n1        = 40;
        c.n2        = 10;
        c.beta_list = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75};
        break;
    case ExperimentKind::CornerSigma:
        c.n1         = 20;
        c.n2         = 20;
        c.beta_list  = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75};
        c.sigma_grid = geometric_grid(1.0, 20.0, 48);
        break;
    case ExperimentKind::PoleLadder:
        c.n_list = {16, 36, 64};
        break;
    case ExperimentKind::VerifyBounds:
        c.beta_list = {0.0};
        c.nt_list   = {16, 32, 64, 144};
        c.radii     = {0.1, 0.5, 1.0};
        break;
    }
    return c;
}

nlohmann::ordered_json ExperimentConfig::echo() const
{
    nlohmann::ordered_json j;
    j["kind"]   = to_string(kind);
    j["target"] = target.name();
    j["domain"] = domain.name();
    j["n1_list"] = n1_list;
    j["n2_list"] = n2_list;
    j["n_list"]  = n_list;
    j["nt_list"] = nt_list;
    j["sigma_grid"] = sigma_grid;
    j["alpha_list"] = alpha_list;
    j["beta_list"]  = beta_list;
    j["radii"]      = radii;
    j["n1"] = n1;
    j["n2"] = n2;
    if (sigma)
    {
        j["sigma"] = *sigma;
    }
    else
    {
        j["sigma"] = nullptr;
    }
    j["scale_c"]           = scale_c;
    j["decades"]           = decades;
    j["fit_points"]        = fit_points;
    j["validation_points"] = validation_points;
    j["eps_rel"]           = eps_rel;
    return j;
}

//------------------------------------------------------------------------------
// Estimators
//------------------------------------------------------------------------------

double log_rate_slope(std::span<const double> degrees, std::span<const double> errors,
                      double lo, double hi)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < degrees.size() && i < errors.size(); ++i)
    {
        const double e = errors[i];
        if (!(e >= lo && e <= hi))
        {
            continue;
        }
        const double x = std::sqrt(degrees[i]);
        const double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2)
    {
        return kNaN;
    }
    const double den = n * sxx - sx * sx;
    return den == 0.0 ? kNaN : (n * sxy - sx * sy) / den;
}

double convergence_slope(const ResultTable& t, const std::string& variant, double lo, double hi)
{
    std::vector<double> n, e;
    for (std::size_t r = 0; r < t.size(); ++r)
    {
        if (t.text(r, "variant") == variant && t.text(r, "status") == "ok")
        {
            n.push_back(t.number(r, "N"));
            e.push_back(t.number(r, "max_err"));
        }
    }
    return log_rate_slope(n, e, lo, hi);
}

double argmin_sigma(std::span<const double> sigmas, std::span<const double> errors)
{
    if (sigmas.size() != errors.size() || sigmas.empty())
    {
        throw InputError("argmin_sigma: need matching, nonempty inputs");
    }
    std::size_t best = sigmas.size();
    for (std::size_t i = 0; i < errors.size(); ++i)
    {
        if (std::isfinite(errors[i]) && errors[i] > 0.0 &&
            (best == sigmas.size() || errors[i] < errors[best]))
        {
            best = i;
        }
    }
    if (best == sigmas.size())
    {
        throw NumericError("argmin_sigma: no finite errors");
    }
    if (best == 0 || best + 1 == sigmas.size() || !std::isfinite(errors[best - 1]) ||
        !std::isfinite(errors[best + 1]))
    {
        return sigmas[best];
    }
    const double x0 = std::log(sigmas[best - 1]), x1 = std::log(sigmas[best]),
                 x2 = std::log(sigmas[best + 1]);
    const double y0 = std::log(errors[best - 1]), y1 = std::log(errors[best]),
                 y2 = std::log(errors[best + 1]);
    // Vertex of the interpolating parabola.
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double c2  = (d12 - d01) / (x2 - x0);
    if (!(c2 > 0.0))
    {
        return sigmas[best];
    }
    const double xv = 0.5 * (x0 + x1) - d01 / (2.0 * c2);
    return std::exp(std::clamp(xv, x0, x2));
}

//------------------------------------------------------------------------------
// Fitting helper
//------------------------------------------------------------------------------

FitResult fit_tapered(const Target& target, const Domain& domain, int n1, int n2, double sigma,
                      double scale_c, const ExperimentConfig& grids)
{
    const Grids g = make_grids(domain, grids);
    BasisSpec spec{tapered_poles(n1, sigma, scale_c), std::nullopt, n2};
    return fit(ApproxProblem{target, domain}, spec, g.fit, g.validation, grids.eps_rel);
}

//------------------------------------------------------------------------------
// Convergence in the degree
//------------------------------------------------------------------------------

ResultTable run_convergence(const ExperimentConfig& cfg)
{
    if (cfg.kind != ExperimentKind::Convergence && cfg.kind != ExperimentKind::CoeffNorm)
    {
        throw InputError("run_convergence: kind must be Convergence or CoeffNorm");
    }
    if (cfg.n1_list.empty())
    {
        throw InputError("run_convergence: empty N1 list");
    }

    enum class Aug { Constant, Polynomial, BigPoles };
    struct Variant
    {
        std::string name;
        bool tapered;
        Aug aug;
        double sigma;
    };
    const double sq2 = std::numbers::sqrt2;
    std::vector<Variant> variants = {
        {"tapered+poly", true, Aug::Polynomial, 2.0 * sq2 * pi},
        {"tapered+big", true, Aug::BigPoles, 2.0 * sq2 * pi},
        {"tapered", true, Aug::Constant, sq2 * pi},
    };
    if (cfg.kind == ExperimentKind::Convergence)
    {
        variants.push_back({"uniform+poly", false, Aug::Polynomial, 2.0 * pi});
        variants.push_back({"uniform+big", false, Aug::BigPoles, 2.0 * pi});
        variants.push_back({"uniform", false, Aug::Constant, pi});
    }

    ResultTable t({"variant", "sigma", "scale_c", "N", "N1", "N2", "max_err", "coeff_2norm",
                   "resid", "eff_rank", "status"});
    stamp(t, cfg);
    const Grids grids = make_grids(cfg.domain, cfg);
    const ApproxProblem problem{cfg.target, cfg.domain};

    for (const auto& v : variants)
    {
        const double sigma = cfg.sigma.value_or(v.sigma);
        for (int n1 : cfg.n1_list)
        {
            const int n2 = v.aug == Aug::Constant ? 0 : default_poly_degree(n1);
            double err = kNaN, cn = kNaN, res = kNaN;
            std::int64_t rank = -1;
            std::string status = "ok";
            try
            {
                PoleSet clustered = v.tapered ? tapered_poles(n1, sigma, cfg.scale_c)
                                              : uniform_poles(n1, sigma, cfg.scale_c);
                BasisSpec spec{std::move(clustered), std::nullopt, 0};
                if (v.aug == Aug::Polynomial)
                {
                    spec.poly_degree = n2;
                }
                else if (v.aug == Aug::BigPoles)
                {
                    spec.extra_finite = big_poles(n1 + n2, n2);
                }
                const FitResult r =
                    fit(problem, spec, grids.fit, grids.validation, cfg.eps_rel);
                err  = r.report.max_err;
                cn   = r.report.coeff_2norm;
                res  = r.report.resid_2norm;
                rank = r.report.eff_rank;
            }
            catch (const std::exception& e)
            {
                status = status_of(e);
            }
            t.add_row({v.name, sigma, cfg.scale_c, static_cast<std::int64_t>(n1 + n2),
                       static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2), err, cn, res,
                       rank, status});
        }
    }
    return t;
}

//------------------------------------------------------------------------------
// Clustering parameter
//------------------------------------------------------------------------------

ResultTable run_sigma_sweep(const ExperimentConfig& cfg)
{
    if (cfg.sigma_grid.size() < 3)
    {
        throw InputError("run_sigma_sweep: sigma grid needs at least 3 points");
    }
    ResultTable t({"curve", "sigma", "max_err", "coeff_2norm", "status"});
    stamp(t, cfg);
    const Grids grids = make_grids(cfg.domain, cfg);
    const auto e_light =
        sweep_errors(cfg.target, cfg.domain, cfg.n1, 0, cfg.sigma_grid, cfg, grids, &t, "lightning");
    const auto e_poly = sweep_errors(cfg.target, cfg.domain, cfg.n1, cfg.n2, cfg.sigma_grid, cfg,
                                     grids, &t, "lightning+poly");
    auto& am = t.metadata()["argmin_sigma"];
    try
    {
        am["lightning"] = argmin_sigma(cfg.sigma_grid, e_light);
    }
    catch (const std::exception&)
    {
        am["lightning"] = nullptr;
    }
    try
    {
        am["lightning+poly"] = argmin_sigma(cfg.sigma_grid, e_poly);
    }
    catch (const std::exception&)
    {
        am["lightning+poly"] = nullptr;
    }
    return t;
}

ResultTable run_optimal_sigma(const ExperimentConfig& cfg)
{
    if (cfg.alpha_list.empty() || cfg.sigma_grid.size() < 3)
    {
        throw InputError("run_optimal_sigma: need alphas and a sigma grid of >= 3 points");
    }
    ResultTable t({"alpha", "argmin_sigma", "predicted_sigma", "rel_dev", "min_err", "status"});
    stamp(t, cfg);
    const Grids grids = make_grids(cfg.domain, cfg);
    const bool with_log = cfg.target.kind() == TargetKind::PowerLog;
    for (double alpha : cfg.alpha_list)
    {
        double best = kNaN, pred = kNaN, dev = kNaN, emin = kNaN;
        std::string status = "ok";
        try
        {
            const Target target = with_log ? Target::power_log(alpha) : Target::power(alpha);
            pred = cfg.domain.single_arm() ? sigma_rule::power_interval(alpha)
                                           : sigma_rule::power_vshape(alpha, cfg.domain.beta());
            const auto errs = sweep_errors(target, cfg.domain, cfg.n1, cfg.n2, cfg.sigma_grid,
                                           cfg, grids, nullptr, "");
            best = argmin_sigma(cfg.sigma_grid, errs);
            dev  = best / pred - 1.0;
            emin = *std::min_element(errs.begin(), errs.end(), [](double a, double b) {
                return std::isnan(b) || (!std::isnan(a) && a < b);
            });
        }
        catch (const std::exception& e)
        {
            status = status_of(e);
        }
        t.add_row({alpha, best, pred, dev, emin, status});
    }
    return t;
}

//------------------------------------------------------------------------------
// (N1, N2) plane
//------------------------------------------------------------------------------

ResultTable run_grid(const ExperimentConfig& cfg)
{
    if (cfg.n1_list.empty() || cfg.n2_list.empty())
    {
        throw InputError("run_grid: N1 and N2 lists must be nonempty");
    }
    const double sigma = cfg.sigma.value_or(sigma_rule::power_interval(cfg.target.alpha()));
    ResultTable t({"N1", "N2", "N", "sigma", "max_err", "row_min_err", "near_optimal_n2",
                   "status"});
    stamp(t, cfg);
    const Grids grids = make_grids(cfg.domain, cfg);
    const ApproxProblem problem{cfg.target, cfg.domain};

    for (int n1 : cfg.n1_list)
    {
        std::vector<double> errs;
        std::vector<std::string> status;
        for (int n2 : cfg.n2_list)
        {
            double err = kNaN;
            std::string st = "ok";
            try
            {
                BasisSpec spec{tapered_poles(n1, sigma, cfg.scale_c), std::nullopt, n2};
                err = fit(problem, spec, grids.fit, grids.validation, cfg.eps_rel).report.max_err;
            }
            catch (const std::exception& e)
            {
                st = status_of(e);
            }
            errs.push_back(err);
            status.push_back(st);
        }
        double row_min = kNaN;
        for (double e : errs)
        {
            if (std::isfinite(e) && !(row_min <= e))
            {
                row_min = e;
            }
        }
        std::int64_t near_opt = -1;
        for (std::size_t i = 0; i < errs.size(); ++i)
        {
            if (std::isfinite(errs[i]) && errs[i] <= 3.0 * row_min &&
                (near_opt < 0 || cfg.n2_list[i] < near_opt))
            {
                near_opt = cfg.n2_list[i];
            }
        }
        for (std::size_t i = 0; i < errs.size(); ++i)
        {
            t.add_row({static_cast<std::int64_t>(n1), static_cast<std::int64_t>(cfg.n2_list[i]),
                       static_cast<std::int64_t>(n1 + std::max(cfg.n2_list[i], 0)), sigma, errs[i],
                       row_min, near_opt, status[i]});
        }
    }
    return t;
}

//------------------------------------------------------------------------------
// V-shaped domains
//------------------------------------------------------------------------------

ResultTable run_vshape(const ExperimentConfig& cfg)
{
    if (cfg.beta_list.empty())
    {
        throw InputError("run_vshape: empty beta list");
    }
    ResultTable t({"beta", "rule", "sigma", "max_err", "status"});
    stamp(t, cfg);
    for (double beta : cfg.beta_list)
    {
        if (!(beta > 0.0 && beta < 2.0))
        {
            t.add_row({beta, std::string("-"), kNaN, kNaN,
                       std::string("input-error: beta must lie in (0, 2)")});
            continue;
        }
        const Domain d    = Domain::vshape(beta);
        const Grids grids = make_grids(d, cfg);
        const std::pair<std::string, double> rules[] = {
            {"2sqrt2pi", sigma_rule::sqrt_interval()},
            {"2sqrt(2-beta)pi", sigma_rule::sqrt_vshape(beta)},
            {"4", 4.0},
        };
        for (const auto& [name, sigma] : rules)
        {
            double err = kNaN;
            std::string status = "ok";
            try
            {
                BasisSpec spec{tapered_poles(cfg.n1, sigma, cfg.scale_c), std::nullopt, cfg.n2};
                err = fit(ApproxProblem{cfg.target, d}, spec, grids.fit, grids.validation,
                          cfg.eps_rel)
                          .report.max_err;
            }
            catch (const std::exception& e)
            {
                status = status_of(e);
            }
            t.add_row({beta, name, sigma, err, status});
        }
    }
    return t;
}

ResultTable run_corner_sigma(const ExperimentConfig& cfg)
{
    if (cfg.beta_list.empty() || cfg.sigma_grid.size() < 3)
    {
        throw InputError("run_corner_sigma: need betas and a sigma grid of >= 3 points");
    }
    ResultTable t({"beta", "alpha", "target", "argmin_sigma", "rule_sigma", "rel_dev", "min_err",
                   "status"});
    stamp(t, cfg);
    for (double beta : cfg.beta_list)
    {
        double best = kNaN, rule = kNaN, dev = kNaN, emin = kNaN;
        std::string name = "-";
        std::string status = "ok";
        try
        {
            const Domain d      = Domain::vshape(beta);
            const Target target = corner_target(beta);
            name                = target.name();
            rule                = sigma_rule::corner(beta);
            const Grids grids   = make_grids(d, cfg);
            const auto errs =
                sweep_errors(target, d, cfg.n1, cfg.n2, cfg.sigma_grid, cfg, grids, nullptr, "");
            best = argmin_sigma(cfg.sigma_grid, errs);
            dev  = best / rule - 1.0;
            emin = *std::min_element(errs.begin(), errs.end(), [](double a, double b) {
                return std::isnan(b) || (!std::isnan(a) && a < b);
            });
        }
        catch (const std::exception& e)
        {
            status = status_of(e);
        }
        t.add_row({beta, 1.0 / beta, name, best, rule, dev, emin, status});
    }
    return t;
}

//------------------------------------------------------------------------------
// Pole ladder
//------------------------------------------------------------------------------

ResultTable run_pole_ladder(const ExperimentConfig& cfg)
{
    if (cfg.n_list.empty())
    {
        throw InputError("run_pole_ladder: empty N list");
    }
    ResultTable t({"N", "j", "k", "pole_magnitude", "tapered_model", "big_model",
                   "count_large", "status"});
    stamp(t, cfg);
    const double sigma = sigma_rule::sqrt_interval();
    for (int n : cfg.n_list)
    {
        double count = kNaN;
        try
        {
            count = count_large_poles(n);
        }
        catch (const std::exception&)
        {
        }
        for (int j = 1; j <= n; ++j)
        {
            const int k          = n - j;
            const double tapered = std::exp(-sigma * (std::sqrt(n) - std::sqrt(j)));
            const double big     = -large_pole_estimate(n, k);
            double mag           = kNaN;
            std::string status   = "ok";
            try
            {
                mag = -stahl_pole(n, j);
            }
            catch (const std::exception& e)
            {
                status = status_of(e);
            }
            t.add_row({static_cast<std::int64_t>(n), static_cast<std::int64_t>(j),
                       static_cast<std::int64_t>(k), mag, tapered, big, count, status});
        }
    }
    return t;
}

//------------------------------------------------------------------------------
// Contour-integral bounds
//------------------------------------------------------------------------------

ResultTable run_verify_bounds(const ExperimentConfig& cfg)
{
    if (cfg.beta_list.empty() || cfg.nt_list.empty())
    {
        throw InputError("run_verify_bounds: need betas and Nt values");
    }
    ResultTable t({"beta", "h", "Nt", "r", "T", "I_minus_S", "end_ints", "gamma_int",
                   "residue_term", "identity_residual", "identity_tol", "gamma_ratio",
                   "conjecture_pass", "residue_ratio", "status"});
    stamp(t, cfg);
    for (double beta : cfg.beta_list)
    {
        const double h    = balanced_step(beta);
        const Complex dir = std::polar(1.0, beta * pi / 2.0);
        for (int nt : cfg.nt_list)
        {
            std::vector<double> radii{contour_regime_min_radius(nt, h, beta)};
            radii.insert(radii.end(), cfg.radii.begin(), cfg.radii.end());
            for (double r : radii)
            {
                const double tt = std::sqrt(nt * h / 4.0);
                double ims = kNaN, ends = kNaN, gam = kNaN, res = kNaN, resid = kNaN,
                       tol = kNaN, ratio = kNaN, rr = kNaN;
                std::int64_t pass = 0;
                std::string status = "ok";
                try
                {
                    const Complex z           = r * dir;
                    const ContourSetup setup  = make_contour_setup(z, nt, h, beta);
                    const ContourTerms terms  = contour_terms(setup);
                    const Complex diff =
                        truncated_integral_I(z, setup.t) - trapezoid_sum_S(z, nt, h);
                    const ConjectureCheck chk = check_conjecture_bound(setup);
                    ims   = std::abs(diff);
                    ends  = std::abs(terms.end_ints);
                    gam   = std::abs(terms.gamma_int);
                    res   = std::abs(terms.residue_term);
                    resid = std::abs(diff - terms.error_estimate());
                    tol   = std::max(1e-10, 1e-3 * ims);
                    ratio = chk.ratio;
                    pass  = chk.pass ? 1 : 0;
                    rr    = std::max(std::abs(terms.residue_plus), std::abs(terms.residue_minus)) /
                         std::exp(-setup.t);
                }
                catch (const std::exception& e)
                {
                    status = status_of(e);
                }
                t.add_row({beta, h, static_cast<std::int64_t>(nt), r, tt, ims, ends, gam, res,
                           resid, tol, ratio, pass, rr, status});
            }
        }
    }
    return t;
}

ResultTable run_experiment(const ExperimentConfig& cfg)
{
    switch (cfg.kind)
    {
    case ExperimentKind::Convergence:
    case ExperimentKind::CoeffNorm: return run_convergence(cfg);
    case ExperimentKind::SigmaSweep: return run_sigma_sweep(cfg);
    case ExperimentKind::OptimalSigmaVsAlpha: return run_optimal_sigma(cfg);
    case ExperimentKind::N1N2Grid: return run_grid(cfg);
    case ExperimentKind::VShapeAngle: return run_vshape(cfg);
    case ExperimentKind::CornerSigma: return run_corner_sigma(cfg);
    case ExperimentKind::PoleLadder: return run_pole_ladder(cfg);
    case ExperimentKind::VerifyBounds: return run_verify_bounds(cfg);
    }
    throw InputError("run_experiment: unknown kind");
}

} // namespace lightning
