#pragma once

#include <complex>

namespace autoheat {

using cplx = std::complex<double>;

/// K_{iR}(x) = \int_0^\infty e^{-x cosh u} cos(R u) du for real R and x > 0.
///
/// The integration line is shifted to Im u = alpha, alpha = arcsin(min(1, R/x))
/// capped below pi/2, which removes the e^{-pi R/2} cancellation of the
/// oscillatory integrand; the shifted integrand is then summed by the
/// trapezoid rule, which converges geometrically for this analytic,
/// doubly-exponentially decaying function. Even in R.
///
/// Throws std::domain_error for x <= 0.
double bessel_k_imag(double R, double x);

/// Euler-Maclaurin evaluation of zeta(s) for Re s > 0, s != 1.
/// `terms` is the direct-summation length, `bernoulli_terms` <= 12.
cplx zeta_euler_maclaurin(cplx s, int terms = 100, int bernoulli_terms = 8);

/// zeta(1 + i t). Throws std::domain_error at the pole t = 0 and for |t| > 100.
cplx zeta_line(double t);

/// Principal-branch-agnostic log Gamma(z) for Re z > 0 (Stirling after an
/// upward shift). Only exp() of the result is meaningful for the imaginary part.
cplx log_gamma(cplx z);

/// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s) on the line s = 1 + 2ir.
cplx completed_zeta_line(double r);

/// Scattering coefficient phi(1/2 + ir) = xi(2ir) / xi(1 + 2ir); unimodular.
cplx scattering_phi(double r);

}  // namespace autoheat
