///
/// \file core.hpp
///
/// Target functions, approximation domains and sample grids.
///

#ifndef LIGHTNING_CORE_HPP
#define LIGHTNING_CORE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lightning
{

using Complex  = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using Index    = Eigen::Index;

/// Bad user input: violated preconditions, points off the domain, etc.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole.
class EvaluationError : public InputError
{
public:
    using InputError::InputError;
};

/// Numerical failure: degenerate matrices, quadrature that does not converge.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

//------------------------------------------------------------------------------
// Target
//------------------------------------------------------------------------------

enum class TargetKind
{
    Sqrt,
    Power,
    PowerLog
};

class Target
{
public:
    static Target sqrt();
    /// z^alpha, alpha > 0 and non-integer.
    static Target power(double alpha);
    /// z^alpha log z, alpha > 0.
    static Target power_log(double alpha);

    TargetKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    std::string name() const;

    friend bool operator==(const Target&, const Target&) = default;

private:
    Target(TargetKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    TargetKind kind_;
    double alpha_;
};

//------------------------------------------------------------------------------
// Domain
//------------------------------------------------------------------------------

enum class DomainKind
{
    UnitInterval,
    VShape
};

///
/// The unit interval [0,1], or the V-shaped domain [0,1]e^{+-i beta pi/2}.
///
/// beta = 0 collapses the V onto the interval; both kinds then describe the
/// same point set and grids emit a single arm.
///
class Domain
{
public:
    static Domain unit_interval() { return Domain(DomainKind::UnitInterval, 0.0); }
    static Domain vshape(double beta);

    DomainKind kind() const noexcept { return kind_; }
    double beta() const noexcept { return beta_; }
    /// Argument of the upper arm, beta*pi/2.
    double arm_angle() const noexcept { return beta_ * std::numbers::pi / 2; }
    bool single_arm() const noexcept { return beta_ == 0.0; }

    /// Membership test with a small relative slack on radius and argument.
    bool contains(Complex z, double tol = 1e-10) const noexcept;

    /// Same point set.
    bool same_set(const Domain& other) const noexcept { return beta_ == other.beta_; }

    std::string name() const;

private:
    Domain(DomainKind kind, double beta) : kind_(kind), beta_(beta) {}

    DomainKind kind_;
    double beta_;
};

//------------------------------------------------------------------------------
// Sample grids
//------------------------------------------------------------------------------

struct GridDescriptor
{
    Domain domain = Domain::unit_interval();
    int decades   = 0; ///< 0 for user-supplied point sets
    int per_arm   = 0;
};

///
/// Points on a domain. Grids built by build_fit_grid / build_validation_grid
/// hold the upper arm first (radii ascending), then the conjugate arm.
///
class SampleGrid
{
public:
    /// Wrap an arbitrary point set; every point must lie on the domain.
    SampleGrid(Domain domain, VectorXc points);
    SampleGrid(VectorXc points, GridDescriptor descriptor);

    const VectorXc& points() const noexcept { return points_; }
    const GridDescriptor& descriptor() const noexcept { return descriptor_; }
    const Domain& domain() const noexcept { return descriptor_.domain; }
    Index size() const noexcept { return points_.size(); }

private:
    VectorXc points_;
    GridDescriptor descriptor_;
};

inline constexpr int kDefaultDecades         = 16;
inline constexpr int kDefaultFitPoints       = 2000;
inline constexpr int kDefaultValidationPoints = 10000;

/// m log-spaced radii from 10^-decades to 1 per arm.
SampleGrid build_fit_grid(const Domain& d, int decades = kDefaultDecades,
                          int m = kDefaultFitPoints);

/// Dense log-spaced grid over 16 decades used to report max-norm errors.
SampleGrid build_validation_grid(const Domain& d, int m = kDefaultValidationPoints);

/// Radii 10^(-decades + decades*k/(m-1)), k = 0..m-1; last entry exactly 1.
Eigen::VectorXd log_radii(int decades, int m);

//------------------------------------------------------------------------------
// Target evaluation
//------------------------------------------------------------------------------

///
/// Value of the target at z, principal branch, exactly 0 at the origin.
/// No domain checks; templated so tests can evaluate in extended precision.
///
template <typename Real>
std::complex<Real> target_value(const Target& t, std::complex<Real> z)
{
    if (z == std::complex<Real>(0))
    {
        return std::complex<Real>(0);
    }
    const Real alpha = static_cast<Real>(t.alpha());
    switch (t.kind())
    {
    case TargetKind::Sqrt:
        return std::sqrt(z);
    case TargetKind::Power:
        return std::exp(alpha * std::log(z));
    case TargetKind::PowerLog:
    {
        const auto lz = std::log(z);
        return std::exp(alpha * lz) * lz;
    }
    }
    return std::complex<Real>(0);
}

/// Checked evaluation: z must satisfy |z| <= 1 and avoid the branch cut.
Complex eval_target(const Target& t, Complex z);

/// Checked evaluation on a specific domain.
Complex eval_target(const Target& t, const Domain& d, Complex z);

/// Samples of the target on a grid.
VectorXc eval_target(const Target& t, const SampleGrid& grid);

} // namespace lightning

#endif /* LIGHTNING_CORE_HPP */
