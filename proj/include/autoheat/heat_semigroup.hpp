#pragma once

#include <vector>

#include "autoheat/sobolev_spaces.hpp"

namespace autoheat {

/// Default index for residual checks.
inline constexpr SobolevIndex kResidualIndex{-4};

struct HeatState {
    double t;
    CoeffFn coeffs;
};

/// exp(lambda t) with results below 1e-300 flushed to zero.
double heat_factor(double lambda, double t);

/// Coefficients of the heat kernel at time t: delta coefficients times exp(lambda t).
HeatState heat_coefficients(double t, const GridPtr& grid);

/// Multiplication by exp(lambda t). Throws std::invalid_argument for t < 0.
CoeffFn semigroup_apply(double t, const CoeffFn& f);

/// V^s norm of the central difference of the heat coefficients minus M applied
/// to them. Throws std::invalid_argument unless 0 < h < t.
double heat_equation_residual(const GridPtr& grid, double t, double h, SobolevIndex s = kResidualIndex);

/// || U(t) - F delta ||_{V^{-l}}.
double initial_condition_gap(const GridPtr& grid, double t);

/// || G(t) f0 - G(t) g0 ||_{V^s}.
double acp_uniqueness_gap(const CoeffFn& f0, const CoeffFn& g0, double t, SobolevIndex s);

/// Backward Euler for y' = M y with `steps` equal steps up to t; each step is
/// the resolvent (1 - kM)^{-1} = -(1/k) (M - 1/k)^{-1}.
CoeffFn implicit_euler(const CoeffFn& f0, double t, int steps);

struct EulerStudy {
    std::vector<int> steps;
    std::vector<double> errors;  // V^s distance to G(t) f0
    std::vector<double> ratios;  // errors[i] / errors[i + 1]
};

/// Errors of implicit_euler for doubling step counts starting at `steps0`.
EulerStudy euler_convergence(const CoeffFn& f0, double t, SobolevIndex s, int steps0, int levels);

/// -int_0^T e^{-Ct} G(t) f dt by Gauss-Legendre panels on [0, T];
/// approximates the resolvent (M - C)^{-1} f.
CoeffFn laplace_resolvent(double C, const CoeffFn& f, double T, int panels, int nodes);

}  // namespace autoheat
