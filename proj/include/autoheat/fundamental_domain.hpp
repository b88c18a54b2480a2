#pragma once

#include <functional>
#include <vector>

#include "autoheat/hpoint.hpp"

namespace autoheat {

/// Quadrature layout for F = {|x| <= 1/2, |z| >= 1} truncated at height Y,
/// measure dx dy / y^2.
///
/// Above y = 1 the domain is a rectangle: midpoint rule in x (exact for
/// trigonometric polynomials of degree < nx) times Gauss-Legendre panels in
/// log y. Below y = 1 each x node of a composite Gauss-Legendre rule carries
/// its own Gauss-Legendre rule on [sqrt(1 - x^2), 1]. The optional cusp cap
/// continues the log y panels above Y; a width of 2 resolves y^{ir} up to
/// r of about 12 with 16 nodes, and 36 panels reach e^{-36} in y^{-1/2}.
struct FundamentalDomainSpec {
    double height = 10.0;
    int nx = 64;
    int y_panels = 12;
    int y_nodes = 16;
    int arc_x_panels = 4;
    int arc_x_nodes = 20;
    int arc_y_nodes = 14;
    int cusp_cap_panels = 36;  // 0 truncates the domain at y = Y
    int cusp_cap_nodes = 16;
    double cusp_cap_width = 2.0;  // panel width in log y
};

/// Points sharing one height; weights include the invariant measure.
struct DomainRow {
    double y;
    std::vector<double> x;
    std::vector<double> w;
};

struct DomainQuadrature {
    double height;
    bool capped = false;
    std::vector<DomainRow> rows;

    [[nodiscard]] std::size_t point_count() const;
    /// Sum of weights; pi/3 when capped, pi/3 - 1/height otherwise.
    [[nodiscard]] double volume() const;
};

DomainQuadrature fundamental_domain_quadrature(const FundamentalDomainSpec& spec = {});

double integrate(const DomainQuadrature& q, const std::function<double(const HPoint&)>& f);

}  // namespace autoheat
