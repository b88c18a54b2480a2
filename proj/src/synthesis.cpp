#include "autoheat/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "autoheat/quadrature.hpp"

namespace autoheat {

namespace {

constexpr double kPi = std::numbers::pi;

double basis_value(const SpectralGrid& grid, std::size_t i, const HPoint& z) {
    const SpectralPoint& p = grid.points()[i];
    switch (p.kind) {
        case SpectralKind::Residual:
            return kResidualBasisValue;
        case SpectralKind::Cuspidal:
            return eval_maass(grid.forms()[*p.form_index], z);
        case SpectralKind::Eisenstein:
            return eisenstein_basis(p.r, z);
    }
    return 0.0;
}

}  // namespace

SynthesisParts synthesize(const CoeffFn& f, const HPoint& z, Exec exec) {
    const SpectralGrid& grid = *f.grid();
    const HPoint zr = reduce_to_fundamental_domain(z).point;
    const auto& w = grid.weights();
    SynthesisParts parts;
    for (std::size_t i = 0; i < grid.cusp_count(); ++i) {
        parts.cusp_part += w[i] * f[i] * basis_value(grid, i, zr);
    }
    const std::size_t ri = grid.residual_index();
    parts.residual_part = w[ri] * f[ri] * kResidualBasisValue;

    const std::size_t first = grid.eisenstein_begin();
    const std::size_t n = grid.size() - first;
    std::vector<double> re(n);
    std::vector<double> im(n);
    auto one = [&](std::size_t j) {
        const std::size_t i = first + j;
        const cplx term = w[i] * f[i] * basis_value(grid, i, zr);
        re[j] = term.real();
        im[j] = term.imag();
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t j = 0; j < n; ++j) {
            one(j);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            one(j);
        }
    }
    parts.eisenstein_part = {pairwise_sum(re), pairwise_sum(im)};
    return parts;
}

FourierRow synthesize_row(const CoeffFn& f, double y) {
    const SpectralGrid& grid = *f.grid();
    const auto& w = grid.weights();
    FourierRow out;
    out.y = y;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double c = w[i] * f[i].real();
        if (c != 0.0) {
            out.axpy(c, basis_row(grid, i, y));
        }
    }
    return out;
}

double tail_estimate(double t, const HPoint& z, const SpectralGrid& grid) {
    const HPoint zr = reduce_to_fundamental_domain(z).point;
    const HPoint i(0.0, 1.0);
    double amp = 0.0;
    const std::size_t first = grid.eisenstein_begin();
    for (std::size_t k = grid.size() >= first + 4 ? grid.size() - 4 : first; k < grid.size(); ++k) {
        const double r = grid.points()[k].r;
        amp = std::max(amp, std::abs(eisenstein_basis(r, i) * eisenstein_basis(r, zr)));
    }
    amp = 2.0 * std::max(amp, 1.0);
    const double R = grid.r_max();
    const double decay = std::exp(-0.25 * t);
    const double eis = amp / (2.0 * kPi) * decay * 0.5 * std::sqrt(kPi / t) * std::erfc(R * std::sqrt(t));
    // Weyl's law: about r^2 / 12 cusp forms up to r
    const double cusp = amp * decay * std::exp(-R * R * t) / (12.0 * t);
    return eis + cusp;
}

SynthesisReport evaluate_heat_kernel(double t, const HPoint& z, const GridPtr& grid, const SynthesisOptions& options) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("evaluate_heat_kernel: requires t > 0 (U(0) is the delta at i), got t = " +
                                    std::to_string(t));
    }
    const CoeffFn coeffs = heat_coefficients(t, grid).coeffs;
    const SynthesisParts parts = synthesize(coeffs, z, options.exec);
    SynthesisReport r;
    r.cusp_part = parts.cusp_part;
    r.residual_part = parts.residual_part;
    r.eisenstein_part = parts.eisenstein_part;
    r.value = parts.value();
    r.tail_estimate = tail_estimate(t, z, *grid);
    r.nodes_used = static_cast<int>(grid->size() - grid->eisenstein_begin());
    r.tail_warning = r.tail_estimate > options.tail_tolerance * std::abs(r.value);
    return r;
}

SmoothnessProfile smoothness_profile(double t, const std::vector<int>& s_list, const GridPtr& grid) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("smoothness_profile: t must be nonnegative");
    }
    const GridPtr doubled = with_r_max(*grid, 2.0 * grid->r_max());
    const CoeffFn a = heat_coefficients(t, grid).coeffs;
    const CoeffFn b = heat_coefficients(t, doubled).coeffs;
    SmoothnessProfile p;
    p.s_list = s_list;
    for (int s : s_list) {
        const double na = norm_vs(a, SobolevIndex(s));
        const double nb = norm_vs(b, SobolevIndex(s));
        p.norms.push_back(na);
        p.doubled_norms.push_back(nb);
        p.max_relative_change = std::max(p.max_relative_change, std::abs(nb - na) / na);
    }
    p.stable = p.max_relative_change <= kStabilityTolerance;
    return p;
}

EmbeddingCheck embedding_check(double t, const GridPtr& grid) {
    const CoeffFn u = heat_coefficients(t, grid).coeffs;
    const double half = 0.5 * grid->r_max();
    const CoeffFn high = u.map([half](const SpectralPoint& p, cplx v) {
        return p.kind != SpectralKind::Residual && p.r > half ? v : cplx(0.0);
    });
    constexpr double h = 1e-4;
    double sup_value = 0.0;
    double sup_grad = 0.0;
    for (int ix = -4; ix <= 4; ++ix) {
        for (int iy = 0; iy <= 4; ++iy) {
            const double x = 0.1 * ix;
            const double y = 1.0 + 0.25 * iy;
            auto f = [&](double dx, double dy) { return synthesize(high, HPoint(x + dx, y + dy)).value().real(); };
            const double fx = (f(h, 0.0) - f(-h, 0.0)) / (2.0 * h);
            const double fy = (f(0.0, h) - f(0.0, -h)) / (2.0 * h);
            sup_value = std::max(sup_value, std::abs(f(0.0, 0.0)));
            sup_grad = std::max(sup_grad, y * std::hypot(fx, fy));
        }
    }
    EmbeddingCheck e;
    e.sup_difference = sup_value + sup_grad;
    e.sobolev_tail = norm_vs(high, SobolevIndex(3));
    e.ratio = e.sobolev_tail > 0.0 ? e.sup_difference / e.sobolev_tail : 0.0;
    return e;
}

MassCheck mass_check(double t, const GridPtr& grid, const FundamentalDomainSpec& spec) {
    FundamentalDomainSpec truncated = spec;
    truncated.cusp_cap_panels = 0;
    const DomainQuadrature q = fundamental_domain_quadrature(truncated);
    const CoeffFn u = heat_coefficients(t, grid).coeffs;
    const std::size_t nrows = q.rows.size();
    std::vector<double> row_sums(nrows);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < nrows; ++j) {
        const DomainRow& row = q.rows[j];
        const FourierRow fr = synthesize_row(u, row.y);
        double s = 0.0;
        for (std::size_t k = 0; k < row.x.size(); ++k) {
            s += row.w[k] * fr.eval(row.x[k]);
        }
        row_sums[j] = s;
    }
    const double Y = q.height;
    // constant terms above Y; int_Y^inf y^{s-2} dy = Y^{s-1} / (1 - s)
    std::vector<double> tail;
    const auto& w = grid->weights();
    const std::size_t ri = grid->residual_index();
    tail.push_back(w[ri] * u[ri].real() * kResidualBasisValue / Y);
    for (std::size_t i = grid->eisenstein_begin(); i < grid->size(); ++i) {
        const double r = grid->points()[i].r;
        const cplx xi = completed_zeta_line(r);
        const cplx s(0.5, r);
        const cplx integral = std::exp((s - 1.0) * std::log(Y)) / (1.0 - s);
        tail.push_back(w[i] * u[i].real() * 2.0 * (xi * integral).real() / std::abs(xi));
    }
    MassCheck m;
    m.tail_part = pairwise_sum(tail);
    m.mass = pairwise_sum(row_sums) + m.tail_part;
    m.pairing = m.mass * kResidualBasisValue;
    return m;
}

}  // namespace autoheat
