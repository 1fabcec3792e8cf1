///
/// \file asymptotics.hpp
///
/// Asymptotic pole distribution of the best rational approximation to |x| on
/// [-1,1] (equivalently sqrt(x) on [0,1]).
///
/// The integrated pole density along the imaginary axis is
///
///   H_N(y) = (N+1)/2 - sqrt(N) F1(y) - F2(y),
///   F1(y)  = (1/pi)   int_y^inf dt / (t sqrt(1+t^2))     = asinh(1/y)/pi,
///   F2(y)  = (1/pi^2) int_y^inf log(t / (1 + sqrt(1+t^2))) dt/t
///          = -(1/pi^2) int_y^inf asinh(1/t) dt/t.
///
/// The poles of the degree-2N approximant to |x| sit near i H_{2N}^{-1}(j);
/// squaring them gives the poles of the degree-N approximant to sqrt(x).
///

#ifndef LIGHTNING_ASYMPTOTICS_HPP
#define LIGHTNING_ASYMPTOTICS_HPP

namespace lightning
{

double F1(double y);
double F2(double y);

/// H_N(y).
double H(int n, double y);

/// dH_N/dy = (1/(pi y)) (sqrt(N)/sqrt(1+y^2) - asinh(1/y)/pi).
double H_derivative(int n, double y);

/// Lower end of the interval on which H_N is increasing, clipped below at 1e-12.
double monotone_lower_bound(int n);

/// The y > 0 with H_N(y) = j. Throws InputError when j lies outside the
/// range of H_N on its monotone branch.
double invert_H(int n, double j);

/// -8N / ((2k+1)^2 pi^2), the (k+1)-th largest pole of the degree-N best
/// approximation to sqrt(x).
double large_pole_estimate(int n, int k);

/// N - H_{2N}(1): expected number of poles with magnitude above 1.
double count_large_poles(int n);

/// Pole of the degree-N approximant to sqrt(x) with index j, -(H_{2N}^{-1}(j))^2.
double stahl_pole(int n, double j);

} // namespace lightning

#endif /* LIGHTNING_ASYMPTOTICS_HPP */
