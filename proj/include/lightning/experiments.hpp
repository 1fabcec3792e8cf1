///
/// \file experiments.hpp
///
/// Deterministic parameter studies producing ResultTables: convergence in the
/// degree, dependence on the clustering parameter, the (N1, N2) plane,
/// V-shaped domains, the asymptotic pole ladder and the contour-integral
/// error bounds.
///
/// Individual rows that fail are recorded with a non-"ok" status and NaN
/// values; the study itself always completes.
///

#ifndef LIGHTNING_EXPERIMENTS_HPP
#define LIGHTNING_EXPERIMENTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <lightning/core.hpp>
#include <lightning/lsq.hpp>
#include <lightning/table.hpp>

namespace lightning
{

enum class ExperimentKind
{
    Convergence,
    SigmaSweep,
    N1N2Grid,
    OptimalSigmaVsAlpha,
    VShapeAngle,
    CornerSigma,
    CoeffNorm,
    PoleLadder,
    VerifyBounds
};

std::string to_string(ExperimentKind kind);

struct ExperimentConfig
{
    ExperimentKind kind = ExperimentKind::Convergence;
    Target target       = Target::sqrt();
    Domain domain       = Domain::unit_interval();

    std::vector<int> n1_list;
    std::vector<int> n2_list;
    std::vector<int> n_list;
    std::vector<int> nt_list;
    std::vector<double> sigma_grid;
    std::vector<double> alpha_list;
    std::vector<double> beta_list;
    std::vector<double> radii;

    int n1 = 10;
    int n2 = 3;
    std::optional<double> sigma; ///< overrides per-variant defaults when set
    double scale_c = 1.0;

    int decades           = kDefaultDecades;
    int fit_points        = kDefaultFitPoints;
    int validation_points = kDefaultValidationPoints;
    double eps_rel        = kDefaultTsvdEps;

    /// Copied into the metadata verbatim when non-empty. Left empty by
    /// default so that output is byte-for-byte reproducible.
    std::string timestamp;

    /// Defaults of every study.
    static ExperimentConfig defaults(ExperimentKind kind);

    nlohmann::ordered_json echo() const;
};

/// Geometric grid of n points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int n);

/// Least-squares slope of log(err) against sqrt(N) over rows whose error lies
/// in [lo, hi]. NaN when fewer than two rows qualify.
double log_rate_slope(std::span<const double> degrees, std::span<const double> errors,
                      double lo = 1e-10, double hi = 1e-3);

/// Slope for one variant of a convergence table.
double convergence_slope(const ResultTable& t, const std::string& variant,
                         double lo = 1e-10, double hi = 1e-3);

/// Minimiser of log(err) over a geometric sigma grid, refined by a parabola
/// through the discrete minimiser and its neighbours (in log sigma).
double argmin_sigma(std::span<const double> sigmas, std::span<const double> errors);

ResultTable run_convergence(const ExperimentConfig& cfg);
ResultTable run_sigma_sweep(const ExperimentConfig& cfg);
ResultTable run_optimal_sigma(const ExperimentConfig& cfg);
ResultTable run_grid(const ExperimentConfig& cfg);
ResultTable run_vshape(const ExperimentConfig& cfg);
ResultTable run_corner_sigma(const ExperimentConfig& cfg);
ResultTable run_pole_ladder(const ExperimentConfig& cfg);
ResultTable run_verify_bounds(const ExperimentConfig& cfg);

/// Dispatch on cfg.kind.
ResultTable run_experiment(const ExperimentConfig& cfg);

/// Single lightning + polynomial fit with tapered poles; the building block of
/// every study and of the `fit` command.
FitResult fit_tapered(const Target& target, const Domain& domain, int n1, int n2,
                      double sigma, double scale_c, const ExperimentConfig& grids);

} // namespace lightning

#endif /* LIGHTNING_EXPERIMENTS_HPP */
