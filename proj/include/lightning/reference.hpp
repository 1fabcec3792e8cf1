///
/// \file reference.hpp
///
/// Closed-form rational approximation to sqrt(z) obtained by applying the
/// trapezoidal rule, in the variable u = (s + T)^2, to the truncated integral
///
///   sqrt(z) ~ (2z/pi) int_{-T}^{T} e^s / (e^{2s} + z) ds.
///
/// With step h and Nt nodes the truncation point is T = sqrt(Nt h / 4), and
///
///   r_t(z) = (z h / pi) sum_{j=1}^{Nt} (jh)^{-1/2} e^{w_j} / (e^{2 w_j} + z),
///   w_j = sqrt(jh) - T.
///
/// For Nt = 4 N1 the first N1 poles of r_t are tapered lightning poles with
/// sigma = 2 sqrt(h); the remaining 3 N1 poles, together with the constant
/// term, are smooth on [0,1] and well approximated by a low-degree polynomial.
///

#ifndef LIGHTNING_REFERENCE_HPP
#define LIGHTNING_REFERENCE_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include <lightning/core.hpp>

namespace lightning
{

/// Step size that balances truncation and discretisation: (2 - beta) pi^2.
double balanced_step(double beta);

struct TrapApproximant
{
    int nt      = 0;
    double h    = 0.0;
    double t    = 0.0; ///< sqrt(nt * h / 4)
    double beta = 0.0;

    /// Balanced step for the given beta.
    static TrapApproximant make(int nt, double beta = 0.0);
    static TrapApproximant make(int nt, double h, double beta);
};

/// r_t(z), summed from j = 1 upward.
Complex trap_eval(const TrapApproximant& t, Complex z);
VectorXc trap_eval(const TrapApproximant& t, const VectorXc& z);

struct PartialFractionForm
{
    int n1 = 0;
    double h = 0.0;
    Eigen::VectorXd poles;    ///< length 4 N1
    Eigen::VectorXd residues; ///< a_j
    Eigen::VectorXd weights;  ///< c_j = (sqrt(h)/pi) sqrt(|p_j| / j); C = sum c_j
    double constant = 0.0;

    /// sum a_j / (z - p_j) + C, evaluated as sum c_j z / (z - p_j) to avoid
    /// cancelling the huge residues of the far poles against C.
    Complex eval(Complex z) const;
    /// Same sum restricted to the poles with |p_j| > 1 plus C.
    Complex eval_tail(Complex z) const;
    Index large_pole_count() const;
};

/// Poles, residues and constant of r_t with Nt = 4 N1.
PartialFractionForm trap_partial_fractions(int n1, double h);

///
/// Uniform error bound for trap_eval with the balanced step:
/// 20 exp(-pi sqrt(Nt/2)) for beta = 0. For beta > 0 only the rate
/// exp(-pi sqrt((2-beta) Nt / 4)) is established; the same constant 20 is
/// used and trap_bound_is_heuristic() reports it.
///
double trap_error_bound(int nt, double beta = 0.0);
inline bool trap_bound_is_heuristic(double beta) { return beta > 0.0; }

///
/// I(z) = (2z/pi) int_{-T}^{T} e^s / (e^{2s} + z) ds by composite
/// Gauss-Legendre with panel doubling (absolute tolerance 1e-13).
///
Complex truncated_integral_I(Complex z, double t);

struct TailFitError
{
    int degree;
    double max_err;
};

///
/// Least-squares polynomial fits of the given degrees to eval_tail on [0,1]
/// (Chebyshev basis, Chebyshev sample points); max error measured on a dense
/// uniform grid.
///
std::vector<TailFitError> polynomial_tail_errors(const PartialFractionForm& pf,
                                                 std::span<const int> degrees);

} // namespace lightning

#endif /* LIGHTNING_REFERENCE_HPP */
