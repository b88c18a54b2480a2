#pragma once

#include <functional>
#include <random>
#include <vector>

#include "autoheat/execution.hpp"
#include "autoheat/fundamental_domain.hpp"
#include "autoheat/spectral_model.hpp"

namespace autoheat {

/// Complex function on a spectral grid, in the grid's entry order. It has no
/// Sobolev index of its own; norms take the index as a parameter.
class CoeffFn {
public:
    /// Throws std::invalid_argument on size mismatch or non-finite values.
    CoeffFn(GridPtr grid, std::vector<cplx> values);

    static CoeffFn zero(GridPtr grid);
    static CoeffFn indicator(GridPtr grid, std::size_t index);
    /// Independent standard complex normal entries.
    static CoeffFn random(GridPtr grid, std::mt19937_64& rng);

    [[nodiscard]] const GridPtr& grid() const { return grid_; }
    [[nodiscard]] const std::vector<cplx>& values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] cplx operator[](std::size_t i) const { return values_[i]; }

    /// Pointwise map f(xi) -> g(point, value).
    [[nodiscard]] CoeffFn map(const std::function<cplx(const SpectralPoint&, cplx)>& g) const;

    friend CoeffFn operator+(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator-(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator*(cplx a, const CoeffFn& f);

private:
    GridPtr grid_;
    std::vector<cplx> values_;
};

/// Throws std::invalid_argument unless both live on the same grid object.
void require_same_grid(const CoeffFn& f, const CoeffFn& g);

double norm_vs(const CoeffFn& f, SobolevIndex s);
/// Unweighted duality pairing sum w f conj(g).
cplx pairing(const CoeffFn& f, const CoeffFn& g);
/// Inner product of V^s.
cplx pairing_vs(const CoeffFn& f, const CoeffFn& g, SobolevIndex s);

/// Multiplication by 1 - lambda, and its inverse.
CoeffFn mu_apply(const CoeffFn& f);
CoeffFn mu_inverse_apply(const CoeffFn& f);
/// Multiplication by lambda.
CoeffFn m_operator_apply(const CoeffFn& f);
/// f / (lambda - C). Throws std::invalid_argument for C <= 0.
CoeffFn resolvent_apply(double C, const CoeffFn& f);

/// Conjugated basepoint values: the spectral coefficients of the delta at i.
CoeffFn delta_coefficients(const GridPtr& grid);

struct AnalyzeOptions {
    FundamentalDomainSpec quadrature;
    double tolerance = 1e-3;  // relative, for the mass-above-cutoff warning
    Exec exec = Exec::Parallel;
};

struct AnalyzeResult {
    CoeffFn coeffs;
    double mass_above_cutoff = 0.0;  // sampled estimate of int_{y > Y} |fn|
    bool warning = false;            // only raised when the quadrature has no cusp cap
};

/// Inner products <fn, Phi_xi> by quadrature over the fundamental domain.
/// fn must be real-valued and Gamma-invariant.
AnalyzeResult analyze(const std::function<double(const HPoint&)>& fn, const GridPtr& grid,
                      const AnalyzeOptions& options = {});

/// Same, with fn given by its values on the quadrature points row by row.
CoeffFn analyze_sampled(const DomainQuadrature& q, const std::vector<std::vector<double>>& samples,
                        const GridPtr& grid, Exec exec = Exec::Parallel);

/// Basis function Phi_xi for grid entry `index` on the line Im z = y.
FourierRow basis_row(const SpectralGrid& grid, std::size_t index, double y);

}  // namespace autoheat
