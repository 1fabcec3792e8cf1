#include <lightning/core.hpp>

#include <sstream>

namespace lightning
{

//------------------------------------------------------------------------------
// Target
//------------------------------------------------------------------------------

Target Target::sqrt()
{
    return Target(TargetKind::Sqrt, 0.5);
}

Target Target::power(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
    {
        throw InputError("power target: alpha must be positive and finite");
    }
    if (alpha == std::round(alpha))
    {
        throw InputError("power target: integer alpha gives a polynomial target");
    }
    return Target(TargetKind::Power, alpha);
}

Target Target::power_log(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
    {
        throw InputError("power-log target: alpha must be positive and finite");
    }
    return Target(TargetKind::PowerLog, alpha);
}

std::string Target::name() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind_)
    {
    case TargetKind::Sqrt:
        return "sqrt";
    case TargetKind::Power:
        os << "power(" << alpha_ << ")";
        break;
    case TargetKind::PowerLog:
        os << "powerlog(" << alpha_ << ")";
        break;
    }
    return os.str();
}

//------------------------------------------------------------------------------
// Domain
//------------------------------------------------------------------------------

Domain Domain::vshape(double beta)
{
    if (!(beta >= 0.0 && beta < 2.0))
    {
        throw InputError("V-shaped domain: beta must lie in [0, 2)");
    }
    return Domain(DomainKind::VShape, beta);
}

bool Domain::contains(Complex z, double tol) const noexcept
{
    const double r = std::abs(z);
    if (r == 0.0)
    {
        return true;
    }
    if (!std::isfinite(r) || r > 1.0 + tol)
    {
        return false;
    }
    if (single_arm())
    {
        return z.real() > 0.0 && std::abs(z.imag()) <= tol * r;
    }
    return std::abs(std::abs(std::arg(z)) - arm_angle()) <= tol;
}

std::string Domain::name() const
{
    if (kind_ == DomainKind::UnitInterval)
    {
        return "interval";
    }
    std::ostringstream os;
    os.precision(17);
    os << "vshape(" << beta_ << ")";
    return os.str();
}

//------------------------------------------------------------------------------
// Grids
//------------------------------------------------------------------------------

SampleGrid::SampleGrid(Domain domain, VectorXc points)
    : SampleGrid(std::move(points), GridDescriptor{domain, 0, 0})
{
}

SampleGrid::SampleGrid(VectorXc points, GridDescriptor descriptor)
    : points_(std::move(points)), descriptor_(descriptor)
{
    if (points_.size() == 0)
    {
        throw InputError("sample grid: empty point set");
    }
    for (Index i = 0; i < points_.size(); ++i)
    {
        if (!descriptor_.domain.contains(points_(i)))
        {
            throw InputError("sample grid: point off the domain " +
                             descriptor_.domain.name());
        }
    }
}

Eigen::VectorXd log_radii(int decades, int m)
{
    Eigen::VectorXd r(m);
    const double d = static_cast<double>(decades);
    for (int k = 0; k < m; ++k)
    {
        r(k) = std::pow(10.0, -d + d * k / (m - 1));
    }
    r(m - 1) = 1.0;
    return r;
}

namespace
{

SampleGrid make_arm_grid(const Domain& d, int decades, int m)
{
    const Eigen::VectorXd r = log_radii(decades, m);
    GridDescriptor desc{d, decades, m};
    if (d.single_arm())
    {
        return SampleGrid(r.cast<Complex>().eval(), desc);
    }
    const Complex w = std::polar(1.0, d.arm_angle());
    VectorXc pts(2 * m);
    for (int k = 0; k < m; ++k)
    {
        pts(k)     = r(k) * w;
        pts(m + k) = std::conj(pts(k));
    }
    return SampleGrid(std::move(pts), desc);
}

} // namespace

SampleGrid build_fit_grid(const Domain& d, int decades, int m)
{
    if (decades < 1 || m < 2)
    {
        throw InputError("fit grid: need decades >= 1 and m >= 2");
    }
    return make_arm_grid(d, decades, m);
}

SampleGrid build_validation_grid(const Domain& d, int m)
{
    if (m < 2)
    {
        throw InputError("validation grid: need m >= 2");
    }
    return make_arm_grid(d, kDefaultDecades, m);
}

//------------------------------------------------------------------------------
// Target evaluation
//------------------------------------------------------------------------------

Complex eval_target(const Target& t, Complex z)
{
    const double r = std::abs(z);
    if (!std::isfinite(r) || r > 1.0 + 1e-10)
    {
        throw InputError("eval_target: |z| must not exceed 1");
    }
    if (z.real() < 0.0 && z.imag() == 0.0)
    {
        throw InputError("eval_target: z lies on the branch cut");
    }
    return target_value(t, z);
}

Complex eval_target(const Target& t, const Domain& d, Complex z)
{
    if (!d.contains(z))
    {
        throw InputError("eval_target: point off the domain " + d.name());
    }
    return target_value(t, z);
}

VectorXc eval_target(const Target& t, const SampleGrid& grid)
{
    const auto& z = grid.points();
    VectorXc f(z.size());
    for (Index i = 0; i < z.size(); ++i)
    {
        f(i) = target_value(t, z(i));
    }
    return f;
}

} // namespace lightning
