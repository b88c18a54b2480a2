#include "autoheat/hpoint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace autoheat {

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
        throw std::domain_error("HPoint: need finite x and y > 0, got y = " + std::to_string(y));
    }
}

HPoint HPoint::invert() const {
    const double n = x_ * x_ + y_ * y_;
    return {-x_ / n, y_ / n};
}

HPoint SL2Z::act(const HPoint& p) const {
    const std::complex<double> z = p.z();
    const std::complex<double> w =
        (static_cast<double>(a) * z + static_cast<double>(b)) /
        (static_cast<double>(c) * z + static_cast<double>(d));
    // Im(gz) = y / |cz + d|^2 avoids cancellation in the division above
    const double cx = static_cast<double>(c) * p.x() + static_cast<double>(d);
    const double cy = static_cast<double>(c) * p.y();
    return {w.real(), p.y() / (cx * cx + cy * cy)};
}

SL2Z SL2Z::operator*(const SL2Z& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Reduction reduce_to_fundamental_domain(const HPoint& p) {
    HPoint z = p;
    SL2Z g;
    for (int iter = 0; iter < 10000; ++iter) {
        const double k = std::round(z.x());
        if (k != 0.0) {
            z = z.translate(-k);
            g = SL2Z{1, -static_cast<long long>(k), 0, 1} * g;
        }
        if (z.x() * z.x() + z.y() * z.y() < 1.0 - 1e-15) {
            z = z.invert();
            g = SL2Z{0, -1, 1, 0} * g;
        } else {
            return {z, g};
        }
    }
    throw std::runtime_error("reduce_to_fundamental_domain: no convergence");
}

double cosh_distance(const HPoint& z, const HPoint& w) {
    const double dx = z.x() - w.x();
    const double dy = z.y() - w.y();
    return 1.0 + (dx * dx + dy * dy) / (2.0 * z.y() * w.y());
}

bool in_fundamental_domain(const HPoint& p, double tol) {
    return std::abs(p.x()) <= 0.5 + tol && p.x() * p.x() + p.y() * p.y() >= 1.0 - tol;
}

}  // namespace autoheat
