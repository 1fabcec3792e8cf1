#include <lightning/lsq.hpp>

#include <cmath>

namespace lightning
{

//------------------------------------------------------------------------------
// BasisSpec
//------------------------------------------------------------------------------

Index BasisSpec::finite_pole_count() const noexcept
{
    return clustered.size() + (extra_finite ? extra_finite->size() : 0);
}

Index BasisSpec::total_degree() const noexcept
{
    return finite_pole_count() + std::max(poly_degree, 0);
}

Index BasisSpec::column_count() const noexcept
{
    return finite_pole_count() + (poly_degree >= 0 ? poly_degree + 1 : 0);
}

Eigen::VectorXd BasisSpec::finite_poles() const
{
    Eigen::VectorXd p(finite_pole_count());
    p.head(clustered.size()) = clustered.poles;
    if (extra_finite)
    {
        p.tail(extra_finite->size()) = extra_finite->poles;
    }
    return p;
}

//------------------------------------------------------------------------------
// Vandermonde with Arnoldi
//------------------------------------------------------------------------------

Eigen::MatrixXcd arnoldi_polynomial_basis(const VectorXc& z, int degree,
                                          PolynomialRecurrence& rec)
{
    const Index m = z.size();
    rec.degree    = degree;
    rec.constant  = 1.0 / std::sqrt(static_cast<double>(m));
    rec.hessenberg.setZero(degree + 1, degree);

    Eigen::MatrixXcd q(m, degree + 1);
    q.col(0).setConstant(rec.constant);
    for (int k = 1; k <= degree; ++k)
    {
        VectorXc v = z.cwiseProduct(q.col(k - 1));
        // Classical Gram-Schmidt, applied twice.
        for (int pass = 0; pass < 2; ++pass)
        {
            const VectorXc h = q.leftCols(k).adjoint() * v;
            v -= q.leftCols(k) * h;
            rec.hessenberg.col(k - 1).head(k) += h;
        }
        const double nrm = v.norm();
        if (!(nrm > 0.0))
        {
            throw NumericError("Arnoldi breakdown: grid has too few distinct points "
                               "for the requested polynomial degree");
        }
        rec.hessenberg(k, k - 1) = nrm;
        q.col(k)                 = v / nrm;
    }
    return q;
}

Eigen::MatrixXcd PolynomialRecurrence::evaluate(const VectorXc& pts) const
{
    Eigen::MatrixXcd w(pts.size(), degree + 1);
    if (degree < 0)
    {
        return w;
    }
    w.col(0).setConstant(constant);
    for (int k = 1; k <= degree; ++k)
    {
        VectorXc v = pts.cwiseProduct(w.col(k - 1));
        v -= w.leftCols(k) * hessenberg.col(k - 1).head(k);
        w.col(k) = v / hessenberg(k, k - 1);
    }
    return w;
}

//------------------------------------------------------------------------------
// Design matrix
//------------------------------------------------------------------------------

namespace
{

void fill_partial_fractions(const VectorXc& z, const Eigen::VectorXd& poles,
                            const Eigen::VectorXd* scales, Eigen::MatrixXcd& out,
                            Eigen::VectorXd* computed_scales)
{
    for (Index j = 0; j < poles.size(); ++j)
    {
        const double p = poles(j);
        double colmax  = 0.0;
        for (Index i = 0; i < z.size(); ++i)
        {
            const Complex d = z(i) - p;
            if (d == Complex(0.0))
            {
                throw EvaluationError("partial fraction: point coincides with pole " +
                                      std::to_string(p));
            }
            out(i, j) = p / d;
            colmax    = std::max(colmax, std::abs(out(i, j)));
        }
        double s;
        if (scales)
        {
            s = (*scales)(j);
        }
        else
        {
            if (!(colmax > 0.0) || !std::isfinite(colmax))
            {
                throw InputError("design matrix: partial fraction column is not finite");
            }
            s = 1.0 / colmax;
            (*computed_scales)(j) = s;
        }
        out.col(j) *= s;
    }
}

} // namespace

DesignMatrix build_design_matrix(const SampleGrid& grid, const BasisSpec& spec)
{
    if (spec.poly_degree < -1)
    {
        throw InputError("design matrix: polynomial degree must be >= -1");
    }
    const Eigen::VectorXd poles = spec.finite_poles();
    if (spec.column_count() == 0)
    {
        throw InputError("design matrix: empty basis");
    }
    for (Index j = 0; j < poles.size(); ++j)
    {
        if (!(poles(j) < 0.0))
        {
            throw InputError("design matrix: poles must be strictly negative");
        }
    }

    const VectorXc& z = grid.points();
    const Index np    = poles.size();

    DesignMatrix dm{Eigen::MatrixXcd(z.size(), spec.column_count()),
                    Eigen::VectorXd(np), poles, PolynomialRecurrence{}, grid, spec};

    fill_partial_fractions(z, poles, nullptr, dm.entries, &dm.column_scales);
    if (spec.poly_degree >= 0)
    {
        dm.entries.rightCols(spec.poly_degree + 1) =
            arnoldi_polynomial_basis(z, spec.poly_degree, dm.recurrence);
    }
    return dm;
}

//------------------------------------------------------------------------------
// TSVD
//------------------------------------------------------------------------------

TsvdSolution tsvd_solve(const Eigen::MatrixXcd& a, const VectorXc& f, double eps_rel)
{
    if (f.size() != a.rows())
    {
        throw InputError("tsvd_solve: right-hand side length does not match rows");
    }
    if (!(eps_rel > 0.0))
    {
        throw InputError("tsvd_solve: eps_rel must be positive");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    if (s.size() == 0 || !(s(0) > 0.0) || !std::isfinite(s(0)))
    {
        throw NumericError("tsvd_solve: degenerate matrix, no singular value above threshold");
    }
    const double cutoff = eps_rel * s(0);
    Index rank          = 0;
    while (rank < s.size() && s(rank) >= cutoff)
    {
        ++rank;
    }
    if (rank == 0)
    {
        throw NumericError("tsvd_solve: degenerate matrix, no singular value above threshold");
    }
    const VectorXc ut_f = svd.matrixU().leftCols(rank).adjoint() * f;
    const VectorXc y    = ut_f.cwiseQuotient(s.head(rank).cast<Complex>());
    return TsvdSolution{svd.matrixV().leftCols(rank) * y, rank, s};
}

//------------------------------------------------------------------------------
// Approximant
//------------------------------------------------------------------------------

Approximant make_approximant(const DesignMatrix& a, VectorXc coeffs)
{
    if (coeffs.size() != a.entries.cols())
    {
        throw InputError("approximant: coefficient count does not match basis");
    }
    return Approximant{a.poles, a.column_scales, a.recurrence, std::move(coeffs),
                       a.grid.domain(), a.spec};
}

Eigen::MatrixXcd Approximant::basis_at(const VectorXc& pts) const
{
    Eigen::MatrixXcd b(pts.size(), coeffs.size());
    fill_partial_fractions(pts, poles, &column_scales, b, nullptr);
    if (recurrence.degree >= 0)
    {
        b.rightCols(recurrence.degree + 1) = recurrence.evaluate(pts);
    }
    return b;
}

VectorXc evaluate(const Approximant& a, const VectorXc& pts)
{
    return a.basis_at(pts) * a.coeffs;
}

double max_error(const Approximant& a, const Target& t, const SampleGrid& grid)
{
    const VectorXc r = evaluate(a, grid.points());
    const VectorXc f = eval_target(t, grid);
    return (r - f).cwiseAbs().maxCoeff();
}

//------------------------------------------------------------------------------
// fit
//------------------------------------------------------------------------------

FitResult fit(const ApproxProblem& problem, const BasisSpec& spec,
              const SampleGrid& fit_grid, const SampleGrid& validation_grid,
              double eps_rel)
{
    if (!problem.domain.same_set(fit_grid.domain()) ||
        !problem.domain.same_set(validation_grid.domain()))
    {
        throw InputError("fit: problem, fit grid and validation grid use different domains");
    }
    const DesignMatrix dm = build_design_matrix(fit_grid, spec);
    const VectorXc f      = eval_target(problem.target, fit_grid);
    TsvdSolution sol      = tsvd_solve(dm, f, eps_rel);

    FitReport rep;
    rep.resid_2norm = (dm.entries * sol.coeffs - f).norm();
    rep.coeff_2norm = sol.coeffs.norm();
    rep.eff_rank    = sol.eff_rank;

    Approximant approx = make_approximant(dm, std::move(sol.coeffs));
    rep.max_err        = max_error(approx, problem.target, validation_grid);
    if (!std::isfinite(rep.max_err))
    {
        throw NumericError("fit: non-finite validation error");
    }

    rep.config.n_clustered       = spec.clustered.size();
    rep.config.n_extra           = spec.extra_finite ? spec.extra_finite->size() : 0;
    rep.config.poly_degree       = spec.poly_degree;
    rep.config.total_degree      = spec.total_degree();
    rep.config.rows              = fit_grid.size();
    rep.config.validation_points = validation_grid.size();
    rep.config.eps_rel           = eps_rel;
    rep.config.target            = problem.target.name();
    rep.config.domain            = problem.domain.name();
    rep.config.clustered         = spec.clustered.describe();
    return FitResult{std::move(approx), rep};
}

FitResult fit(const ApproxProblem& problem, const BasisSpec& spec,
              const SampleGrid& fit_grid, double eps_rel)
{
    return fit(problem, spec, fit_grid, build_validation_grid(problem.domain), eps_rel);
}

} // namespace lightning
