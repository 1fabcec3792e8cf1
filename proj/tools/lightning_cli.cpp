#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lightning/experiments.hpp>
#include <lightning/poles.hpp>

using namespace lightning;

namespace
{

struct Options
{
    std::string target = "sqrt";
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<int> n1;
    std::vector<int> n2;
    std::optional<double> sigma;
    std::optional<double> scale_c;
    std::optional<int> grid_points;
    std::optional<int> decades;
    double tsvd_eps    = kDefaultTsvdEps;
    std::string format = "csv";
    std::string out;
    bool seedless = false;
};

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--target", o.target, "Target function")
        ->check(CLI::IsMember({"sqrt", "power", "powerlog"}));
    sub->add_option("--alpha", o.alpha, "Exponent alpha (repeatable)");
    sub->add_option("--beta", o.beta, "V-domain angle parameter beta in [0, 2) (repeatable)");
    sub->add_option("--n1", o.n1, "Number of clustered poles (repeatable)");
    sub->add_option("--n2", o.n2, "Polynomial degree (repeatable)");
    sub->add_option("--sigma", o.sigma, "Clustering parameter");
    sub->add_option("--scale-c", o.scale_c, "Pole scale C");
    sub->add_option("--grid-points", o.grid_points, "Fit points per arm");
    sub->add_option("--decades", o.decades, "Decades spanned by the sample grids");
    sub->add_option("--tsvd-eps", o.tsvd_eps, "Relative TSVD threshold");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output path (stdout when omitted)");
    sub->add_flag("--seedless", o.seedless, "Accepted for compatibility; all runs are deterministic");
}

Target make_target(const Options& o, double alpha)
{
    if (o.target == "sqrt")
    {
        return Target::sqrt();
    }
    if (o.target == "power")
    {
        return Target::power(alpha);
    }
    return Target::power_log(alpha);
}

Target make_target(const Options& o)
{
    if (o.target != "sqrt" && o.alpha.empty())
    {
        throw InputError("--alpha is required for --target " + o.target);
    }
    return make_target(o, o.alpha.empty() ? 0.5 : o.alpha.front());
}

Domain make_domain(const Options& o)
{
    return o.beta.empty() ? Domain::unit_interval() : Domain::vshape(o.beta.front());
}

ExperimentConfig configure(ExperimentKind kind, const Options& o)
{
    ExperimentConfig c = ExperimentConfig::defaults(kind);
    if (o.sigma)
    {
        c.sigma = *o.sigma;
    }
    if (o.scale_c)
    {
        c.scale_c = *o.scale_c;
    }
    if (o.grid_points)
    {
        c.fit_points = *o.grid_points;
    }
    if (o.decades)
    {
        c.decades = *o.decades;
    }
    c.eps_rel = o.tsvd_eps;
    if (!o.n1.empty())
    {
        c.n1      = o.n1.front();
        c.n1_list = o.n1;
    }
    if (!o.n2.empty())
    {
        c.n2      = o.n2.front();
        c.n2_list = o.n2;
    }
    return c;
}

void emit(const ResultTable& t, const Options& o)
{
    const TableFormat fmt = o.format == "json" ? TableFormat::Json : TableFormat::Csv;
    if (o.out.empty())
    {
        std::cout << (fmt == TableFormat::Json ? to_json(t) : to_csv(t));
        std::cout.flush();
    }
    else
    {
        write_table(t, fmt, o.out);
    }
}

ResultTable cmd_fit(const Options& o)
{
    ExperimentConfig c = configure(ExperimentKind::Convergence, o);
    c.target           = make_target(o);
    c.domain           = make_domain(o);
    const int n1       = o.n1.empty() ? 20 : o.n1.front();
    const int n2       = o.n2.empty() ? default_poly_degree(n1) : o.n2.front();
    double sigma       = 0.0;
    if (o.sigma)
    {
        sigma = *o.sigma;
    }
    else if (c.target.kind() == TargetKind::Sqrt)
    {
        sigma = c.domain.single_arm() ? sigma_rule::sqrt_interval()
                                      : sigma_rule::sqrt_vshape(c.domain.beta());
    }
    else
    {
        sigma = c.domain.single_arm() ? sigma_rule::power_interval(c.target.alpha())
                                      : sigma_rule::power_vshape(c.target.alpha(), c.domain.beta());
    }
    const double scale = o.scale_c.value_or(1.0);
    const FitResult r  = fit_tapered(c.target, c.domain, n1, n2, sigma, scale, c);

    ResultTable t({"target", "domain", "N1", "N2", "sigma", "scale_c", "max_err", "resid",
                   "coeff_2norm", "eff_rank"});
    t.metadata()["kind"]   = "Fit";
    t.metadata()["config"] = c.echo();
    t.add_row({c.target.name(), c.domain.name(), static_cast<std::int64_t>(n1),
               static_cast<std::int64_t>(n2), sigma, scale, r.report.max_err,
               r.report.resid_2norm, r.report.coeff_2norm,
               static_cast<std::int64_t>(r.report.eff_rank)});
    return t;
}

ResultTable cmd_sigma_sweep(const Options& o)
{
    if (o.alpha.size() > 1)
    {
        ExperimentConfig c = configure(ExperimentKind::OptimalSigmaVsAlpha, o);
        c.alpha_list       = o.alpha;
        c.target           = o.target == "powerlog" ? Target::power_log(0.5) : Target::power(0.5);
        c.domain           = make_domain(o);
        return run_optimal_sigma(c);
    }
    ExperimentConfig c = configure(ExperimentKind::SigmaSweep, o);
    if (!o.alpha.empty() || o.target != "sqrt")
    {
        c.target = make_target(o);
    }
    c.domain = make_domain(o);
    return run_sigma_sweep(c);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lightning + polynomial rational approximation studies"};
    app.set_version_flag("--version", std::string(LIGHTNING_VERSION));
    app.require_subcommand(1);

    Options o;
    struct Command
    {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"fit", "Single tapered lightning + polynomial fit"},
        {"converge", "Convergence in the degree for every pole configuration"},
        {"sigma-sweep", "Error against sigma; repeat --alpha for the optimal-sigma table"},
        {"grid", "Error over the (N1, N2) plane"},
        {"vshape", "Sigma rules on V-shaped domains"},
        {"corner-sigma", "Optimal sigma for corner singularities"},
        {"pole-ladder", "Asymptotic pole magnitudes of best approximations to |x|"},
        {"verify-bounds", "Contour-integral identity and bounds for the trapezoidal rule"},
    };
    for (const auto& c : commands)
    {
        add_common(app.add_subcommand(c.name, c.help), o);
    }
    auto* nt_opt = app.get_subcommand("verify-bounds");
    std::vector<int> nts;
    std::vector<double> radii;
    nt_opt->add_option("--nt", nts, "Trapezoidal node counts (repeatable)");
    nt_opt->add_option("--radius", radii, "Extra radii |z| (repeatable)");
    std::vector<int> ns;
    app.get_subcommand("pole-ladder")->add_option("--n", ns, "Degrees N (repeatable)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 1;
    }

    try
    {
        const std::string cmd = app.get_subcommands().front()->get_name();
        ResultTable t;
        if (cmd == "fit")
        {
            t = cmd_fit(o);
        }
        else if (cmd == "converge")
        {
            ExperimentConfig c = configure(ExperimentKind::Convergence, o);
            c.target           = make_target(o);
            c.domain           = make_domain(o);
            t                  = run_convergence(c);
        }
        else if (cmd == "sigma-sweep")
        {
            t = cmd_sigma_sweep(o);
        }
        else if (cmd == "grid")
        {
            ExperimentConfig c = configure(ExperimentKind::N1N2Grid, o);
            if (!o.alpha.empty() || o.target != "sqrt")
            {
                c.target = make_target(o);
            }
            c.domain = make_domain(o);
            t        = run_grid(c);
        }
        else if (cmd == "vshape")
        {
            ExperimentConfig c = configure(ExperimentKind::VShapeAngle, o);
            if (!o.beta.empty())
            {
                c.beta_list = o.beta;
            }
            c.target = make_target(o);
            t        = run_vshape(c);
        }
        else if (cmd == "corner-sigma")
        {
            ExperimentConfig c = configure(ExperimentKind::CornerSigma, o);
            if (!o.beta.empty())
            {
                c.beta_list = o.beta;
            }
            t = run_corner_sigma(c);
        }
        else if (cmd == "pole-ladder")
        {
            ExperimentConfig c = configure(ExperimentKind::PoleLadder, o);
            if (!ns.empty())
            {
                c.n_list = ns;
            }
            t = run_pole_ladder(c);
        }
        else
        {
            ExperimentConfig c = configure(ExperimentKind::VerifyBounds, o);
            if (!o.beta.empty())
            {
                c.beta_list = o.beta;
            }
            if (!nts.empty())
            {
                c.nt_list = nts;
            }
            if (!radii.empty())
            {
                c.radii = radii;
            }
            t = run_verify_bounds(c);
        }
        emit(t, o);
    }
    catch (const InputError& e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    catch (const NumericError& e)
    {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 2;
    }
    catch (const std::exception& e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
