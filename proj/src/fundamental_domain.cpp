#include "autoheat/fundamental_domain.hpp"

#include <cmath>
#include <stdexcept>

#include "autoheat/quadrature.hpp"

namespace autoheat {

std::size_t DomainQuadrature::point_count() const {
    std::size_t n = 0;
    for (const auto& row : rows) {
        n += row.x.size();
    }
    return n;
}

double DomainQuadrature::volume() const {
    double v = 0.0;
    for (const auto& row : rows) {
        for (double w : row.w) {
            v += w;
        }
    }
    return v;
}

DomainQuadrature fundamental_domain_quadrature(const FundamentalDomainSpec& spec) {
    if (!(spec.height > 1.0) || spec.nx < 1 || spec.y_panels < 1 || spec.y_nodes < 1 || spec.arc_x_panels < 1 ||
        spec.arc_x_nodes < 1 || spec.arc_y_nodes < 1 || spec.cusp_cap_panels < 0 ||
        spec.cusp_cap_nodes < 1 || !(spec.cusp_cap_width > 0.0)) {
        throw std::invalid_argument("fundamental_domain_quadrature: bad spec");
    }
    DomainQuadrature q;
    q.height = spec.height;

    // arc region, y in [sqrt(1 - x^2), 1]
    std::vector<double> xb(spec.arc_x_panels + 1);
    for (int i = 0; i <= spec.arc_x_panels; ++i) {
        xb[i] = -0.5 + static_cast<double>(i) / spec.arc_x_panels;
    }
    const QuadratureRule gx = composite_gauss_legendre(xb, spec.arc_x_nodes);
    const QuadratureRule gy = gauss_legendre(spec.arc_y_nodes);
    for (std::size_t i = 0; i < gx.size(); ++i) {
        const double x = gx.nodes[i];
        const double lo = std::sqrt(1.0 - x * x);
        const double half = 0.5 * (1.0 - lo);
        const double mid = 0.5 * (1.0 + lo);
        for (std::size_t j = 0; j < gy.size(); ++j) {
            const double y = mid + half * gy.nodes[j];
            q.rows.push_back({y, {x}, {gx.weights[i] * half * gy.weights[j] / (y * y)}});
        }
    }

    // rectangle region, u = log y in [0, log Y], dy / y^2 = e^{-u} du
    std::vector<double> ub(spec.y_panels + 1);
    const double umax = std::log(spec.height);
    for (int i = 0; i <= spec.y_panels; ++i) {
        ub[i] = umax * i / spec.y_panels;
    }
    const QuadratureRule gu = composite_gauss_legendre(ub, spec.y_nodes);
    std::vector<double> xs(spec.nx);
    for (int k = 0; k < spec.nx; ++k) {
        xs[k] = -0.5 + (k + 0.5) / spec.nx;
    }
    for (std::size_t j = 0; j < gu.size(); ++j) {
        const double y = std::exp(gu.nodes[j]);
        const double wy = gu.weights[j] / y;
        q.rows.push_back({y, xs, std::vector<double>(spec.nx, wy / spec.nx)});
    }

    if (spec.cusp_cap_panels > 0) {
        q.capped = true;
        std::vector<double> cb(spec.cusp_cap_panels + 1);
        for (int i = 0; i <= spec.cusp_cap_panels; ++i) {
            cb[i] = umax + spec.cusp_cap_width * i;
        }
        const QuadratureRule gc = composite_gauss_legendre(cb, spec.cusp_cap_nodes);
        for (std::size_t j = 0; j < gc.size(); ++j) {
            const double y = std::exp(gc.nodes[j]);
            q.rows.push_back({y, xs, std::vector<double>(spec.nx, gc.weights[j] / y / spec.nx)});
        }
    }
    return q;
}

double integrate(const DomainQuadrature& q, const std::function<double(const HPoint&)>& f) {
    double total = 0.0;
    for (const auto& row : q.rows) {
        double s = 0.0;
        for (std::size_t k = 0; k < row.x.size(); ++k) {
            s += row.w[k] * f(HPoint(row.x[k], row.y));
        }
        total += s;
    }
    return total;
}

}  // namespace autoheat
