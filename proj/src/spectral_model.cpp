#include "autoheat/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "autoheat/quadrature.hpp"

namespace autoheat {

double eigenvalue(const SpectralPoint& p) {
    return p.kind == SpectralKind::Residual ? 0.0 : -(0.25 + p.r * p.r);
}

double sobolev_weight(const SpectralPoint& p, SobolevIndex s) {
    const double base = 1.0 - p.eigenvalue;
    const int k = s.value();
    // integer powers by repeated multiplication keep w(s) w(-s) = 1 tight
    double w = 1.0;
    for (int i = 0; i < std::abs(k); ++i) {
        w *= base;
    }
    return k >= 0 ? w : 1.0 / w;
}

SpectralPoint make_cusp_point(const MaassFormData& f, std::size_t index) {
    SpectralPoint p;
    p.kind = SpectralKind::Cuspidal;
    p.r = f.r;
    p.eigenvalue = -(0.25 + f.r * f.r);
    p.basepoint_value = basepoint_value(SpectralKind::Cuspidal, f.r, &f);
    p.form_index = index;
    return p;
}

SpectralPoint make_residual_point() {
    SpectralPoint p;
    p.kind = SpectralKind::Residual;
    p.basepoint_value = kResidualBasisValue;
    return p;
}

SpectralPoint make_eisenstein_point(double r) {
    SpectralPoint p;
    p.kind = SpectralKind::Eisenstein;
    p.r = r;
    p.eigenvalue = -(0.25 + r * r);
    p.basepoint_value = basepoint_value(SpectralKind::Eisenstein, r);
    return p;
}

GridPtr build_grid(const std::vector<MaassFormData>& cusp_data, const GridOptions& options) {
    if (!(options.r_max > 0.0) || !std::isfinite(options.r_max)) {
        throw std::invalid_argument("build_grid: r_max must be positive");
    }
    if (options.panels < 1 || options.nodes_per_panel < 1) {
        throw std::invalid_argument("build_grid: need at least one panel and one node per panel");
    }
    std::vector<MaassFormData> forms;
    for (const auto& f : cusp_data) {
        if (f.r <= options.r_max) {
            forms.push_back(f);
        }
    }
    std::sort(forms.begin(), forms.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
    // duplicates among forms above r_max are still ingestion errors
    std::vector<double> all_r;
    for (const auto& f : cusp_data) {
        all_r.push_back(f.r);
    }
    std::sort(all_r.begin(), all_r.end());
    for (std::size_t i = 1; i < all_r.size(); ++i) {
        if (all_r[i] - all_r[i - 1] <= 1e-9) {
            throw std::invalid_argument("build_grid: duplicate cusp parameter r = " + std::to_string(all_r[i]));
        }
    }

    auto grid = std::shared_ptr<SpectralGrid>(new SpectralGrid());
    grid->options_ = options;
    grid->source_forms_ = cusp_data;
    grid->cusp_count_ = forms.size();
    for (std::size_t i = 0; i < forms.size(); ++i) {
        grid->points_.push_back(make_cusp_point(forms[i], i));
        grid->weights_.push_back(1.0);
    }
    grid->forms_ = std::move(forms);
    grid->points_.push_back(make_residual_point());
    grid->weights_.push_back(1.0);

    const auto bounds = geometric_panels(0.0, options.r_max, options.panels, options.panel_ratio);
    const QuadratureRule rule = composite_gauss_legendre(bounds, options.nodes_per_panel);
    const std::size_t first = grid->points_.size();
    grid->points_.resize(first + rule.size());
    grid->weights_.resize(first + rule.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < rule.size(); ++j) {
        grid->points_[first + j] = make_eisenstein_point(rule.nodes[j]);
        grid->weights_[first + j] = rule.weights[j] / (2.0 * std::numbers::pi);
    }
    return grid;
}

GridPtr build_grid(const std::vector<MaassFormData>& cusp_data, double r_max, int panels) {
    GridOptions o;
    o.r_max = r_max;
    o.panels = panels;
    return build_grid(cusp_data, o);
}

GridPtr with_r_max(const SpectralGrid& grid, double r_max) {
    GridOptions o = grid.options();
    o.r_max = r_max;
    return build_grid(grid.source_forms(), o);
}

}  // namespace autoheat
