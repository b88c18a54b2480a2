#pragma once

#include <array>
#include <complex>

namespace autoheat {

/// A point z = x + iy of the upper half-plane.
class HPoint {
public:
    /// Throws std::domain_error unless y > 0 and both coordinates are finite.
    HPoint(double x, double y);

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] std::complex<double> z() const { return {x_, y_}; }

    [[nodiscard]] HPoint translate(double k) const { return {x_ + k, y_}; }
    [[nodiscard]] HPoint invert() const;  // -1/z

private:
    double x_;
    double y_;
};

/// Integer matrix [[a, b], [c, d]] with determinant one.
struct SL2Z {
    long long a = 1;
    long long b = 0;
    long long c = 0;
    long long d = 1;

    [[nodiscard]] HPoint act(const HPoint& p) const;
    [[nodiscard]] SL2Z operator*(const SL2Z& o) const;
};

struct Reduction {
    HPoint point;
    SL2Z gamma;  // point == gamma.act(input)
};

/// Classical reduction into |x| <= 1/2, |z| >= 1.
Reduction reduce_to_fundamental_domain(const HPoint& p);

/// cosh of the hyperbolic distance.
double cosh_distance(const HPoint& z, const HPoint& w);

bool in_fundamental_domain(const HPoint& p, double tol = 1e-12);

}  // namespace autoheat
