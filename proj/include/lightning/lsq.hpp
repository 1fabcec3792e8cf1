///
/// \file lsq.hpp
///
/// Lightning + polynomial least-squares fitting.
///
/// The basis consists of scaled partial fractions s_j p_j / (z - p_j) followed
/// by a discretely orthonormal polynomial chain produced by Vandermonde with
/// Arnoldi. Coefficients are computed by a truncated SVD.
///

#ifndef LIGHTNING_LSQ_HPP
#define LIGHTNING_LSQ_HPP

#include <optional>

#include <Eigen/Dense>

#include <lightning/core.hpp>
#include <lightning/poles.hpp>

namespace lightning
{

inline constexpr double kDefaultTsvdEps = 2e-14;

struct BasisSpec
{
    PoleSet clustered;
    std::optional<PoleSet> extra_finite;
    /// Degree of the polynomial part; -1 means none, 0 a constant only.
    int poly_degree = 0;

    Index finite_pole_count() const noexcept;
    /// N = |clustered| + |extra| + max(poly_degree, 0).
    Index total_degree() const noexcept;
    /// Number of design-matrix columns.
    Index column_count() const noexcept;
    /// All finite poles in column order.
    Eigen::VectorXd finite_poles() const;
};

///
/// Polynomial chain q_0, ..., q_n orthonormal over the fit grid, together with
/// the Hessenberg coefficients that regenerate it on any other point set:
///
///   q_0 = 1/sqrt(M),   H(k,k-1) q_k = z q_{k-1} - sum_{j<k} H(j,k-1) q_j.
///
struct PolynomialRecurrence
{
    int degree = -1;
    double constant = 0.0;
    Eigen::MatrixXcd hessenberg; ///< (degree+1) x degree

    /// Columns q_0..q_degree evaluated at pts.
    Eigen::MatrixXcd evaluate(const VectorXc& pts) const;
};

/// Vandermonde with Arnoldi with one reorthogonalisation pass.
/// Returns the orthonormal basis on `z` and fills `rec`.
Eigen::MatrixXcd arnoldi_polynomial_basis(const VectorXc& z, int degree,
                                          PolynomialRecurrence& rec);

struct DesignMatrix
{
    Eigen::MatrixXcd entries;      ///< M x (K+1)
    Eigen::VectorXd column_scales; ///< one per partial-fraction column
    Eigen::VectorXd poles;         ///< finite poles in column order
    PolynomialRecurrence recurrence;
    SampleGrid grid;
    BasisSpec spec;
};

DesignMatrix build_design_matrix(const SampleGrid& grid, const BasisSpec& spec);

struct TsvdSolution
{
    VectorXc coeffs;
    Index eff_rank = 0;
    Eigen::VectorXd singular_values;
};

/// Minimum-norm least-squares solution keeping singular values
/// >= eps_rel * sigma_max.
TsvdSolution tsvd_solve(const Eigen::MatrixXcd& a, const VectorXc& f,
                        double eps_rel = kDefaultTsvdEps);

inline TsvdSolution tsvd_solve(const DesignMatrix& a, const VectorXc& f,
                               double eps_rel = kDefaultTsvdEps)
{
    return tsvd_solve(a.entries, f, eps_rel);
}

struct Approximant
{
    Eigen::VectorXd poles;
    Eigen::VectorXd column_scales;
    PolynomialRecurrence recurrence;
    VectorXc coeffs;
    Domain domain = Domain::unit_interval();
    BasisSpec spec;

    double coeff_norm() const { return coeffs.norm(); }
    /// Basis columns at pts (same layout as DesignMatrix::entries).
    Eigen::MatrixXcd basis_at(const VectorXc& pts) const;
};

Approximant make_approximant(const DesignMatrix& a, VectorXc coeffs);

/// sum_j c_j column_j(pt). Throws EvaluationError if a point hits a pole.
VectorXc evaluate(const Approximant& a, const VectorXc& pts);

/// max over the grid of |r - target|.
double max_error(const Approximant& a, const Target& t, const SampleGrid& grid);

struct ApproxProblem
{
    Target target = Target::sqrt();
    Domain domain = Domain::unit_interval();
};

struct FitConfigEcho
{
    Index n_clustered = 0;
    Index n_extra     = 0;
    int poly_degree   = 0;
    Index total_degree = 0;
    Index rows        = 0;
    Index validation_points = 0;
    double eps_rel    = kDefaultTsvdEps;
    std::string target;
    std::string domain;
    std::string clustered;
};

struct FitReport
{
    double max_err     = 0.0;
    double resid_2norm = 0.0;
    double coeff_2norm = 0.0;
    Index eff_rank     = 0;
    FitConfigEcho config;
};

struct FitResult
{
    Approximant approximant;
    FitReport report;
};

FitResult fit(const ApproxProblem& problem, const BasisSpec& spec,
              const SampleGrid& fit_grid, const SampleGrid& validation_grid,
              double eps_rel = kDefaultTsvdEps);

/// Uses build_validation_grid(problem.domain) for the error report.
FitResult fit(const ApproxProblem& problem, const BasisSpec& spec,
              const SampleGrid& fit_grid, double eps_rel = kDefaultTsvdEps);

} // namespace lightning

#endif /* LIGHTNING_LSQ_HPP */
