#include "autoheat/sobolev_spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace autoheat {

CoeffFn::CoeffFn(GridPtr grid, std::vector<cplx> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_) {
        throw std::invalid_argument("CoeffFn: null grid");
    }
    if (values_.size() != grid_->size()) {
        throw std::invalid_argument("CoeffFn: " + std::to_string(values_.size()) + " values for a grid of " +
                                    std::to_string(grid_->size()) + " points");
    }
    for (const cplx& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("CoeffFn: non-finite value");
        }
    }
}

CoeffFn CoeffFn::zero(GridPtr grid) {
    const std::size_t n = grid->size();
    return {std::move(grid), std::vector<cplx>(n)};
}

CoeffFn CoeffFn::indicator(GridPtr grid, std::size_t index) {
    std::vector<cplx> v(grid->size());
    v.at(index) = 1.0;
    return {std::move(grid), std::move(v)};
}

CoeffFn CoeffFn::random(GridPtr grid, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> v(grid->size());
    for (auto& x : v) {
        const double re = normal(rng);
        x = {re, normal(rng)};
    }
    return {std::move(grid), std::move(v)};
}

CoeffFn CoeffFn::map(const std::function<cplx(const SpectralPoint&, cplx)>& g) const {
    std::vector<cplx> out(values_.size());
    const auto& pts = grid_->points();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = g(pts[i], values_[i]);
    }
    return {grid_, std::move(out)};
}

void require_same_grid(const CoeffFn& f, const CoeffFn& g) {
    if (f.grid() != g.grid()) {
        throw std::invalid_argument("coefficient functions live on different spectral grids");
    }
}

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b) {
    require_same_grid(a, b);
    std::vector<cplx> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.values_[i] + b.values_[i];
    }
    return {a.grid_, std::move(v)};
}

CoeffFn operator-(const CoeffFn& a, const CoeffFn& b) {
    require_same_grid(a, b);
    std::vector<cplx> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.values_[i] - b.values_[i];
    }
    return {a.grid_, std::move(v)};
}

CoeffFn operator*(cplx a, const CoeffFn& f) {
    std::vector<cplx> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a * f.values_[i];
    }
    return {f.grid_, std::move(v)};
}

double norm_vs(const CoeffFn& f, SobolevIndex s) {
    const auto& pts = f.grid()->points();
    const auto& w = f.grid()->weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sum += w[i] * sobolev_weight(pts[i], s) * std::norm(f[i]);
    }
    return std::sqrt(sum);
}

cplx pairing(const CoeffFn& f, const CoeffFn& g) {
    require_same_grid(f, g);
    const auto& w = f.grid()->weights();
    cplx sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sum += w[i] * f[i] * std::conj(g[i]);
    }
    return sum;
}

cplx pairing_vs(const CoeffFn& f, const CoeffFn& g, SobolevIndex s) {
    require_same_grid(f, g);
    const auto& pts = f.grid()->points();
    const auto& w = f.grid()->weights();
    cplx sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sum += w[i] * sobolev_weight(pts[i], s) * f[i] * std::conj(g[i]);
    }
    return sum;
}

CoeffFn mu_apply(const CoeffFn& f) {
    return f.map([](const SpectralPoint& p, cplx v) { return (1.0 - p.eigenvalue) * v; });
}

CoeffFn mu_inverse_apply(const CoeffFn& f) {
    return f.map([](const SpectralPoint& p, cplx v) { return v / (1.0 - p.eigenvalue); });
}

CoeffFn m_operator_apply(const CoeffFn& f) {
    return f.map([](const SpectralPoint& p, cplx v) { return p.eigenvalue * v; });
}

CoeffFn resolvent_apply(double C, const CoeffFn& f) {
    if (!(C > 0.0)) {
        throw std::invalid_argument("resolvent_apply: C must be positive, got " + std::to_string(C));
    }
    return f.map([C](const SpectralPoint& p, cplx v) { return v / (p.eigenvalue - C); });
}

CoeffFn delta_coefficients(const GridPtr& grid) {
    std::vector<cplx> v(grid->size());
    const auto& pts = grid->points();
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = std::conj(pts[i].basepoint_value);
    }
    return {grid, std::move(v)};
}

FourierRow basis_row(const SpectralGrid& grid, std::size_t index, double y) {
    const SpectralPoint& p = grid.points().at(index);
    switch (p.kind) {
        case SpectralKind::Residual: {
            FourierRow row;
            row.y = y;
            row.constant = kResidualBasisValue;
            return row;
        }
        case SpectralKind::Cuspidal:
            return maass_row(grid.forms().at(*p.form_index), y);
        case SpectralKind::Eisenstein:
            return eisenstein_basis_row(p.r, y);
    }
    return {};
}

CoeffFn analyze_sampled(const DomainQuadrature& q, const std::vector<std::vector<double>>& samples,
                        const GridPtr& grid, Exec exec) {
    if (samples.size() != q.rows.size()) {
        throw std::invalid_argument("analyze_sampled: sample rows do not match the quadrature");
    }
    const std::size_t n = grid->size();
    std::vector<cplx> out(n);
    auto one = [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < q.rows.size(); ++j) {
            const DomainRow& row = q.rows[j];
            const FourierRow b = basis_row(*grid, i, row.y);
            double s = 0.0;
            for (std::size_t k = 0; k < row.x.size(); ++k) {
                s += row.w[k] * samples[j][k] * b.eval(row.x[k]);
            }
            acc += s;
        }
        out[i] = acc;  // basis functions are real
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < n; ++i) {
            one(i);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            one(i);
        }
    }
    return {grid, std::move(out)};
}

AnalyzeResult analyze(const std::function<double(const HPoint&)>& fn, const GridPtr& grid,
                      const AnalyzeOptions& options) {
    const DomainQuadrature q = fundamental_domain_quadrature(options.quadrature);
    std::vector<std::vector<double>> samples(q.rows.size());
    double l1 = 0.0;
    for (std::size_t j = 0; j < q.rows.size(); ++j) {
        const DomainRow& row = q.rows[j];
        samples[j].resize(row.x.size());
        for (std::size_t k = 0; k < row.x.size(); ++k) {
            samples[j][k] = fn(HPoint(row.x[k], row.y));
            l1 += row.w[k] * std::abs(samples[j][k]);
        }
    }
    // mass above the cutoff, from |fn| sampled on three lines above Y assuming
    // at most y^{1/2} growth: int_Y^inf y^{1/2} dy / y^2 = 2 / sqrt(Y)
    const double Y = q.height;
    double top = 0.0;
    for (double h : {Y, 1.5 * Y, 2.0 * Y}) {
        for (int k = 0; k < 16; ++k) {
            const double x = -0.5 + (k + 0.5) / 16.0;
            top = std::max(top, std::abs(fn(HPoint(x, h))) / std::sqrt(h / Y));
        }
    }
    AnalyzeResult result{analyze_sampled(q, samples, grid, options.exec), top * 2.0 / Y, false};
    result.warning = !q.capped && result.mass_above_cutoff > options.tolerance * std::max(l1, 1e-300);
    return result;
}

}  // namespace autoheat
