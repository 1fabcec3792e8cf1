#include <lightning/reference.hpp>

#include <cmath>
#include <numbers>

#include <lightning/quadrature.hpp>

namespace lightning
{

using std::numbers::pi;

double balanced_step(double beta)
{
    if (!(beta >= 0.0 && beta < 2.0))
    {
        throw InputError("balanced_step: beta must lie in [0, 2)");
    }
    return (2.0 - beta) * pi * pi;
}

TrapApproximant TrapApproximant::make(int nt, double beta)
{
    return make(nt, balanced_step(beta), beta);
}

TrapApproximant TrapApproximant::make(int nt, double h, double beta)
{
    if (nt < 1)
    {
        throw InputError("trapezoidal approximant: Nt must be at least 1");
    }
    if (!(h > 0.0) || !std::isfinite(h))
    {
        throw InputError("trapezoidal approximant: h must be positive");
    }
    if (!(beta >= 0.0 && beta < 2.0))
    {
        throw InputError("trapezoidal approximant: beta must lie in [0, 2)");
    }
    return TrapApproximant{nt, h, std::sqrt(nt * h / 4.0), beta};
}

Complex trap_eval(const TrapApproximant& t, Complex z)
{
    if (z == Complex(0.0))
    {
        return Complex(0.0);
    }
    Complex sum(0.0);
    for (int j = 1; j <= t.nt; ++j)
    {
        const double sj = std::sqrt(j * t.h);
        const double w  = sj - t.t;
        const Complex den = std::exp(2.0 * w) + z;
        if (den == Complex(0.0))
        {
            throw EvaluationError("trap_eval: z coincides with a pole");
        }
        sum += std::exp(w) / (sj * den);
    }
    return z * t.h / pi * sum;
}

VectorXc trap_eval(const TrapApproximant& t, const VectorXc& z)
{
    VectorXc r(z.size());
    for (Index i = 0; i < z.size(); ++i)
    {
        r(i) = trap_eval(t, z(i));
    }
    return r;
}

//------------------------------------------------------------------------------
// Partial fractions
//------------------------------------------------------------------------------

PartialFractionForm trap_partial_fractions(int n1, double h)
{
    if (n1 < 1 || !(h > 0.0))
    {
        throw InputError("trap_partial_fractions: need N1 >= 1 and h > 0");
    }
    const int n       = 4 * n1;
    const double sh   = std::sqrt(h);
    const double sn1  = std::sqrt(static_cast<double>(n1));
    PartialFractionForm pf;
    pf.n1 = n1;
    pf.h  = h;
    pf.poles.resize(n);
    pf.residues.resize(n);
    pf.weights.resize(n);
    double c = 0.0;
    for (int j = 1; j <= n; ++j)
    {
        const double p   = -std::exp(-2.0 * sh * (sn1 - std::sqrt(static_cast<double>(j))));
        const double rad = std::sqrt(std::abs(p) / j);
        pf.poles(j - 1)    = p;
        pf.weights(j - 1)  = sh / pi * rad;
        pf.residues(j - 1) = sh / pi * p * rad;
        c += pf.weights(j - 1);
    }
    pf.constant = c;
    return pf;
}

Complex PartialFractionForm::eval(Complex z) const
{
    // a_j / (z - p_j) + c_j = c_j z / (z - p_j)
    Complex sum(0.0);
    for (Index j = 0; j < poles.size(); ++j)
    {
        const Complex d = z - poles(j);
        if (d == Complex(0.0))
        {
            throw EvaluationError("partial fractions: z coincides with a pole");
        }
        sum += weights(j) * z / d;
    }
    return sum;
}

Complex PartialFractionForm::eval_tail(Complex z) const
{
    Complex sum(0.0);
    for (Index j = 0; j < poles.size(); ++j)
    {
        if (j < n1)
        {
            sum += weights(j);
        }
        else
        {
            sum += weights(j) * z / (z - poles(j));
        }
    }
    return sum;
}

Index PartialFractionForm::large_pole_count() const
{
    return (poles.array().abs() > 1.0).count();
}

double trap_error_bound(int nt, double beta)
{
    if (nt < 1)
    {
        throw InputError("trap_error_bound: Nt must be at least 1");
    }
    if (!(beta >= 0.0 && beta < 2.0))
    {
        throw InputError("trap_error_bound: beta must lie in [0, 2)");
    }
    return 20.0 * std::exp(-pi * std::sqrt((2.0 - beta) * nt / 4.0));
}

//------------------------------------------------------------------------------
// Truncated integral
//------------------------------------------------------------------------------

Complex truncated_integral_I(Complex z, double t)
{
    if (!(t > 0.0))
    {
        throw InputError("truncated_integral_I: T must be positive");
    }
    if (z == Complex(0.0))
    {
        return Complex(0.0);
    }
    auto integrand = [z](double s) -> Complex {
        return std::exp(s) / (std::exp(2.0 * s) + z);
    };
    // The integral grows like 1/sqrt|z|; the relative tolerance keeps small-z
    // values accurate well below the absolute target of 1e-13 on I.
    quad::Options opt;
    opt.abs_tol    = 1e-13 * pi / (2.0 * std::abs(z));
    opt.rel_tol    = 1e-14;
    opt.min_panels = std::max(8L, static_cast<long>(std::ceil(2.0 * t)));
    return 2.0 * z / pi * quad::integrate(integrand, -t, t, opt);
}

//------------------------------------------------------------------------------
// Polynomial tail
//------------------------------------------------------------------------------

namespace
{

Eigen::MatrixXd chebyshev_vandermonde(const Eigen::VectorXd& x, int degree)
{
    Eigen::MatrixXd v(x.size(), degree + 1);
    for (Index i = 0; i < x.size(); ++i)
    {
        const double t = 2.0 * x(i) - 1.0;
        double t0 = 1.0;
        double t1 = t;
        v(i, 0) = 1.0;
        if (degree >= 1)
        {
            v(i, 1) = t;
        }
        for (int k = 2; k <= degree; ++k)
        {
            const double t2 = 2.0 * t * t1 - t0;
            v(i, k) = t2;
            t0 = t1;
            t1 = t2;
        }
    }
    return v;
}

} // namespace

std::vector<TailFitError> polynomial_tail_errors(const PartialFractionForm& pf,
                                                 std::span<const int> degrees)
{
    constexpr int samples = 400;
    constexpr int dense   = 4001;
    Eigen::VectorXd xs(samples), fs(samples);
    for (int i = 0; i < samples; ++i)
    {
        xs(i) = 0.5 * (1.0 - std::cos(pi * (i + 0.5) / samples));
        fs(i) = pf.eval_tail(xs(i)).real();
    }
    Eigen::VectorXd xd(dense), fd(dense);
    for (int i = 0; i < dense; ++i)
    {
        xd(i) = static_cast<double>(i) / (dense - 1);
        fd(i) = pf.eval_tail(xd(i)).real();
    }

    std::vector<TailFitError> out;
    out.reserve(degrees.size());
    for (int deg : degrees)
    {
        if (deg < 0 || deg >= samples / 2)
        {
            throw InputError("polynomial_tail_errors: degree out of range");
        }
        const Eigen::MatrixXd v    = chebyshev_vandermonde(xs, deg);
        const Eigen::VectorXd coef = v.colPivHouseholderQr().solve(fs);
        const Eigen::VectorXd res  = chebyshev_vandermonde(xd, deg) * coef - fd;
        out.push_back({deg, res.cwiseAbs().maxCoeff()});
    }
    return out;
}

} // namespace lightning
