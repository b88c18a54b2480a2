#pragma once

#include <vector>

#include "autoheat/execution.hpp"
#include "autoheat/heat_semigroup.hpp"

namespace autoheat {

struct SynthesisParts {
    cplx cusp_part = 0.0;
    cplx residual_part = 0.0;
    cplx eisenstein_part = 0.0;

    [[nodiscard]] cplx value() const { return cusp_part + residual_part + eisenstein_part; }
};

/// sum_xi w_xi f(xi) Phi_xi(z) over the grid, z reduced into the fundamental
/// domain first. Eisenstein terms are reduced pairwise in node order.
SynthesisParts synthesize(const CoeffFn& f, const HPoint& z, Exec exec = Exec::Parallel);

/// The same sum restricted to the line Im z = y (no reduction; y must be in
/// the range where every basis expansion converges, y >= sqrt(3)/2).
FourierRow synthesize_row(const CoeffFn& f, double y);

struct SynthesisReport {
    cplx value = 0.0;
    cplx cusp_part = 0.0;
    cplx residual_part = 0.0;
    cplx eisenstein_part = 0.0;
    double tail_estimate = 0.0;
    int nodes_used = 0;
    bool tail_warning = false;
};

struct SynthesisOptions {
    double tail_tolerance = 1e-10;
    Exec exec = Exec::Parallel;
};

/// Heat kernel based at i, U(t)(z), by spectral synthesis. Throws
/// std::invalid_argument for t <= 0.
SynthesisReport evaluate_heat_kernel(double t, const HPoint& z, const GridPtr& grid,
                                     const SynthesisOptions& options = {});

/// Bound for the spectrum above r_max: Eisenstein line and cusp forms counted
/// by Weyl's law, with |Phi(i) Phi(z)| taken from the last Eisenstein nodes.
double tail_estimate(double t, const HPoint& z, const SpectralGrid& grid);

struct SmoothnessProfile {
    std::vector<int> s_list;
    std::vector<double> norms;          // ||U(t)||_{V^s}
    std::vector<double> doubled_norms;  // same with r_max doubled
    double max_relative_change = 0.0;
    bool stable = false;  // max_relative_change <= stability_tolerance
};

inline constexpr double kStabilityTolerance = 1e-6;

/// t = 0 is accepted here (delta coefficients) to exhibit the divergence.
SmoothnessProfile smoothness_profile(double t, const std::vector<int>& s_list, const GridPtr& grid);

struct EmbeddingCheck {
    double sup_difference = 0.0;  // C^1 norm on the patch of the r > r_max/2 part
    double sobolev_tail = 0.0;    // ||.||_{V^3} of the same part
    double ratio = 0.0;
};

/// Compares partial syntheses of U(t) truncated at r_max and r_max/2 on the
/// patch |x| <= 0.4, 1 <= y <= 2 in the C^1 norm (values and first
/// derivatives) against the V^3 norm of the discarded coefficients.
EmbeddingCheck embedding_check(double t, const GridPtr& grid);

struct MassCheck {
    double mass = 0.0;        // int_F U(t)
    double tail_part = 0.0;   // analytic contribution above the quadrature height
    double pairing = 0.0;     // <U(t), Phi_0>
};

/// int_F U(t) dmu: quadrature below Y of the synthesized rows plus the exact
/// integral of the constant term above Y.
MassCheck mass_check(double t, const GridPtr& grid, const FundamentalDomainSpec& spec = {});

}  // namespace autoheat
