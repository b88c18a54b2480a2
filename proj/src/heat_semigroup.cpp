#include "autoheat/heat_semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "autoheat/quadrature.hpp"

namespace autoheat {

double heat_factor(double lambda, double t) {
    const double v = std::exp(-std::abs(lambda) * t);
    return v < 1e-300 ? 0.0 : v;
}

HeatState heat_coefficients(double t, const GridPtr& grid) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("heat_coefficients: t must be nonnegative");
    }
    return {t, semigroup_apply(t, delta_coefficients(grid))};
}

CoeffFn semigroup_apply(double t, const CoeffFn& f) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("semigroup_apply: t must be nonnegative, got " + std::to_string(t));
    }
    return f.map([t](const SpectralPoint& p, cplx v) { return heat_factor(p.eigenvalue, t) * v; });
}

double heat_equation_residual(const GridPtr& grid, double t, double h, SobolevIndex s) {
    if (!(h > 0.0) || !(h < t)) {
        throw std::invalid_argument("heat_equation_residual: need 0 < h < t");
    }
    const CoeffFn plus = heat_coefficients(t + h, grid).coeffs;
    const CoeffFn minus = heat_coefficients(t - h, grid).coeffs;
    const CoeffFn mid = heat_coefficients(t, grid).coeffs;
    const CoeffFn diff = (1.0 / (2.0 * h)) * (plus - minus);
    return norm_vs(diff - m_operator_apply(mid), s);
}

double initial_condition_gap(const GridPtr& grid, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("initial_condition_gap: t must be positive");
    }
    const CoeffFn delta = delta_coefficients(grid);
    return norm_vs(semigroup_apply(t, delta) - delta, SobolevIndex(-kEll));
}

double acp_uniqueness_gap(const CoeffFn& f0, const CoeffFn& g0, double t, SobolevIndex s) {
    require_same_grid(f0, g0);
    return norm_vs(semigroup_apply(t, f0) - semigroup_apply(t, g0), s);
}

CoeffFn implicit_euler(const CoeffFn& f0, double t, int steps) {
    if (steps < 1 || !(t > 0.0)) {
        throw std::invalid_argument("implicit_euler: need t > 0 and at least one step");
    }
    const double k = t / steps;
    CoeffFn y = f0;
    for (int i = 0; i < steps; ++i) {
        y = (-1.0 / k) * resolvent_apply(1.0 / k, y);
    }
    return y;
}

EulerStudy euler_convergence(const CoeffFn& f0, double t, SobolevIndex s, int steps0, int levels) {
    EulerStudy study;
    const CoeffFn exact = semigroup_apply(t, f0);
    int n = steps0;
    for (int i = 0; i < levels; ++i, n *= 2) {
        study.steps.push_back(n);
        study.errors.push_back(norm_vs(implicit_euler(f0, t, n) - exact, s));
    }
    for (std::size_t i = 0; i + 1 < study.errors.size(); ++i) {
        study.ratios.push_back(study.errors[i] / study.errors[i + 1]);
    }
    return study;
}

CoeffFn laplace_resolvent(double C, const CoeffFn& f, double T, int panels, int nodes) {
    std::vector<double> bounds(panels + 1);
    for (int i = 0; i <= panels; ++i) {
        bounds[i] = T * i / panels;
    }
    const QuadratureRule rule = composite_gauss_legendre(bounds, nodes);
    return f.map([&](const SpectralPoint& p, cplx v) {
        double acc = 0.0;
        for (std::size_t j = 0; j < rule.size(); ++j) {
            acc += rule.weights[j] * std::exp(-C * rule.nodes[j]) * heat_factor(p.eigenvalue, rule.nodes[j]);
        }
        return -acc * v;
    });
}

}  // namespace autoheat
