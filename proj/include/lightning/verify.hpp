///
/// \file verify.hpp
///
/// Contour-integral representation of the quadrature error of the
/// trapezoidal approximant.
///
/// With f(u,z) = (z/pi) u^{-1/2} e^{sqrt(u)-T} / (e^{2(sqrt(u)-T)} + z),
/// I(z) = int_0^{4T^2} f(u,z) du and S(z) = h sum_{j=1}^{Nt} f(jh, z), the
/// error I - S equals
///
///   int_{G1 + G2} f  +  int_G f delta  -  2 pi i (r+ delta(pi+) + r- delta(pi-))
///
/// where G is the positively oriented rectangle
/// [b, 4T^2 + b] x [-ia, ia], b = 1 - beta/2, a = 2 pi (T + log|z| / 2),
/// G1 = [0, b], G2 = [4T^2 + b, 4T^2], and pi+-, r+- are the two poles of f
/// inside G and their residues. delta(u) = mu(u) - m(u) with mu = -1/2 above
/// the real axis, +1/2 below, and m(u) = -(i/2) cot(pi u / h).
///

#ifndef LIGHTNING_VERIFY_HPP
#define LIGHTNING_VERIFY_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <lightning/core.hpp>

namespace lightning
{

///
/// delta(u) = mu(u) - m(u), evaluated as q/(1-q) with q = exp(2 pi i u / h)
/// above the real axis and -q/(1-q) with q = exp(-2 pi i u / h) below, which
/// stays accurate where cot saturates.
///
template <typename Real>
std::complex<Real> delta(std::complex<Real> u, Real h)
{
    constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
    const std::complex<Real> i(0, 1);
    const bool upper = u.imag() >= 0;
    const std::complex<Real> q = std::exp((upper ? i : -i) * two_pi * u / h);
    const std::complex<Real> den = Real(1) - q;
    if (std::abs(den) == Real(0))
    {
        throw EvaluationError("delta: u lies on the lattice of quadrature nodes");
    }
    return upper ? q / den : -q / den;
}

/// f(u, z) with the principal square root.
Complex contour_integrand(Complex u, Complex z, double t);

/// S(z) = h sum_{j=1}^{Nt} f(jh, z), summed directly.
Complex trapezoid_sum_S(Complex z, int nt, double h);

struct PoleResidue
{
    Complex pole;
    Complex residue;
    int k;
    int branch; ///< +1 or -1
};

///
/// Poles (A + i(theta/2 +- pi(k + 1/2)))^2 of f(., z), A = T + log|z|/2,
/// theta = arg z, for k = 0..kmax and both branches, with residues
/// -+ (i/pi) (-1)^k sqrt(z). For real z this is the familiar
/// A^2 - pi^2 (k+1/2)^2 +- 2 pi i (k+1/2) A.
///
std::vector<PoleResidue> pole_residue_pairs(Complex z, double t, double beta, int kmax);

struct ContourSetup
{
    Complex z;
    int nt;
    double t;
    double h;
    double beta;
    double a;     ///< half-height 2 pi (T + log r / 2)
    double left;  ///< 1 - beta/2
    double right; ///< 4 T^2 + 1 - beta/2
    PoleResidue plus;
    PoleResidue minus;
};

///
/// Validates the regime r in [e^{4 + 2 beta - 2T}, 1], that z lies on an arm
/// of the V-domain, that the vertical sides avoid the node lattice, and that
/// exactly pi+- lie inside the rectangle.
///
ContourSetup make_contour_setup(Complex z, int nt, double h, double beta);

/// Lower end of the radius range covered by the contour identity.
double contour_regime_min_radius(int nt, double h, double beta);

struct ContourTerms
{
    Complex end_ints;     ///< int over G1 and G2 of f
    Complex gamma_int;    ///< int over G of f delta
    Complex residue_term; ///< 2 pi i (r+ delta(pi+) + r- delta(pi-))
    Complex residue_plus;  ///< 2 pi i r+ delta(pi+)
    Complex residue_minus; ///< 2 pi i r- delta(pi-)

    Complex error_estimate() const { return end_ints + gamma_int - residue_term; }
};

ContourTerms contour_terms(const ContourSetup& setup, double abs_tol = 1e-12);

struct ConjectureCheck
{
    double lhs;   ///< |int_G f delta|
    double rhs;   ///< 12 e^{-T} (beta = 0) or cap e^{-T}
    double ratio; ///< lhs / e^{-T}
    bool pass;
};

///
/// beta = 0: lhs < 12 e^{-T}. For beta > 0 no constant is known; the check
/// passes when lhs / e^{-T} <= cap.
///
ConjectureCheck check_conjecture_bound(const ContourSetup& setup, double cap = 100.0);

struct ResidueRateRow
{
    int nt;
    double r;
    double t;
    double residue_ratio;  ///< max(|2 pi r+ delta(pi+)|, |2 pi r- delta(pi-)|) / e^{-T}
    double combined_ratio; ///< |residue_term| / e^{-T}
};

///
/// Size of the residue contributions relative to e^{-T} for each Nt and
/// radius. z = r e^{i beta pi / 2}.
///
std::vector<ResidueRateRow> residue_rate_check(double h, double beta,
                                               std::span<const int> nts,
                                               std::span<const double> radii);

} // namespace lightning

#endif /* LIGHTNING_VERIFY_HPP */
