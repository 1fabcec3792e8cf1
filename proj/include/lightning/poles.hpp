///
/// \file poles.hpp
///
/// Preassigned pole configurations on the negative real axis.
///

#ifndef LIGHTNING_POLES_HPP
#define LIGHTNING_POLES_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include <lightning/core.hpp>

namespace lightning
{

struct UniformScheme
{
    int n1;
    double sigma;
    double scale;
};

struct TaperedScheme
{
    int n1;
    double sigma;
    double scale;
};

/// Finite poles clustering towards infinity, modelled on the largest poles of
/// the best approximation to sqrt(x).
struct BigAsymptoticScheme
{
    int n;
    int n2;
};

using PoleScheme = std::variant<UniformScheme, TaperedScheme, BigAsymptoticScheme>;

///
/// Ordered strictly negative, distinct poles plus the scheme that produced
/// them. Uniform sets run j = 0..N1-1 (largest magnitude first), tapered sets
/// j = 1..N1 (smallest first), big-pole sets i = 1..N2 (largest first).
///
struct PoleSet
{
    Eigen::VectorXd poles;
    PoleScheme scheme;

    Index size() const noexcept { return poles.size(); }
    std::string describe() const;
};

//------------------------------------------------------------------------------
// Raw generators, templated on the scalar so tests can run them in long double
//------------------------------------------------------------------------------

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> uniform_pole_values(int n1, Real sigma, Real c)
{
    Eigen::Matrix<Real, Eigen::Dynamic, 1> p(n1);
    const Real sn = std::sqrt(static_cast<Real>(n1));
    for (int j = 0; j < n1; ++j)
    {
        p(j) = -c * std::exp(-sigma * static_cast<Real>(j) / sn);
    }
    return p;
}

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> tapered_pole_values(int n1, Real sigma, Real c)
{
    Eigen::Matrix<Real, Eigen::Dynamic, 1> p(n1);
    const Real sn = std::sqrt(static_cast<Real>(n1));
    for (int j = 1; j <= n1; ++j)
    {
        p(j - 1) = -c * std::exp(-sigma * (sn - std::sqrt(static_cast<Real>(j))));
    }
    return p;
}

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> big_pole_values(int n, int n2)
{
    constexpr Real pi = std::numbers::pi_v<Real>;
    Eigen::Matrix<Real, Eigen::Dynamic, 1> p(n2);
    for (int i = 1; i <= n2; ++i)
    {
        const Real odd = static_cast<Real>(2 * i + 1);
        p(i - 1) = -Real(8) * static_cast<Real>(n) / (odd * odd * pi * pi);
    }
    return p;
}

//------------------------------------------------------------------------------
// Checked constructors
//------------------------------------------------------------------------------

/// p_j = -C exp(-sigma j / sqrt(N1)), j = 0..N1-1.
PoleSet uniform_poles(int n1, double sigma, double scale = 1.0);

/// p_j = -C exp(-sigma (sqrt(N1) - sqrt(j))), j = 1..N1.
PoleSet tapered_poles(int n1, double sigma, double scale = 1.0);

/// p_i = -8N / ((2i+1)^2 pi^2), i = 1..N2.
PoleSet big_poles(int n, int n2);

//------------------------------------------------------------------------------
// Clustering-parameter rules
//------------------------------------------------------------------------------

namespace sigma_rule
{

/// sqrt(x) on [0,1] with tapered poles: 2 sqrt(2) pi.
inline double sqrt_interval() { return 2.0 * std::numbers::sqrt2 * std::numbers::pi; }

/// x^alpha on [0,1]: 2 pi / sqrt(alpha).
inline double power_interval(double alpha) { return 2.0 * std::numbers::pi / std::sqrt(alpha); }

/// sqrt(z) on the V-domain with angle beta*pi: 2 sqrt(2 - beta) pi.
inline double sqrt_vshape(double beta) { return 2.0 * std::sqrt(2.0 - beta) * std::numbers::pi; }

/// z^alpha on the V-domain: sqrt(2(2 - beta)) pi / sqrt(alpha).
inline double power_vshape(double alpha, double beta)
{
    return std::sqrt(2.0 * (2.0 - beta)) * std::numbers::pi / std::sqrt(alpha);
}

/// Corner of a Laplace problem (alpha = 1/beta): sqrt(2(2 - beta) beta) pi.
inline double corner(double beta) { return std::sqrt(2.0 * (2.0 - beta) * beta) * std::numbers::pi; }

} // namespace sigma_rule

/// ceil(1.3 sqrt(N1)), the polynomial degree paired with N1 clustered poles.
int default_poly_degree(int n1);

} // namespace lightning

#endif /* LIGHTNING_POLES_HPP */
