#pragma once

#include <span>
#include <vector>

namespace autoheat {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on P_n, weights from P_n').
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre rule with `n` nodes per panel on consecutive panels given by
/// strictly increasing boundaries b_0 < b_1 < ... < b_P.
QuadratureRule composite_gauss_legendre(std::span<const double> boundaries, int n);

/// Panel boundaries on [a, b] whose widths grow geometrically by `ratio`.
std::vector<double> geometric_panels(double a, double b, int panels, double ratio);

/// Pairwise (cascade) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace autoheat
