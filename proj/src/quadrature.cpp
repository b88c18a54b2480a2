#include "autoheat/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace autoheat {

namespace {

QuadratureRule compute_gauss_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
                p1 = x;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    if (n == 1) {
        return QuadratureRule{{0.0}, {2.0}};
    }
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, compute_gauss_legendre(n)).first;
    }
    return it->second;
}

QuadratureRule composite_gauss_legendre(std::span<const double> boundaries, int n) {
    if (boundaries.size() < 2) {
        throw std::invalid_argument("composite_gauss_legendre: need at least one panel");
    }
    const QuadratureRule base = gauss_legendre(n);
    QuadratureRule rule;
    rule.nodes.reserve((boundaries.size() - 1) * n);
    rule.weights.reserve((boundaries.size() - 1) * n);
    for (std::size_t p = 0; p + 1 < boundaries.size(); ++p) {
        const double a = boundaries[p];
        const double b = boundaries[p + 1];
        if (!(b > a)) {
            throw std::invalid_argument("composite_gauss_legendre: boundaries must increase");
        }
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int i = 0; i < n; ++i) {
            rule.nodes.push_back(mid + half * base.nodes[i]);
            rule.weights.push_back(half * base.weights[i]);
        }
    }
    return rule;
}

std::vector<double> geometric_panels(double a, double b, int panels, double ratio) {
    if (panels < 1 || !(b > a) || !(ratio > 0.0)) {
        throw std::invalid_argument("geometric_panels: bad arguments");
    }
    std::vector<double> out(panels + 1);
    double total = 0.0;
    double width = 1.0;
    for (int i = 0; i < panels; ++i) {
        total += width;
        width *= ratio;
    }
    out[0] = a;
    width = (b - a) / total;
    for (int i = 1; i <= panels; ++i) {
        out[i] = out[i - 1] + width;
        width *= ratio;
    }
    out[panels] = b;
    return out;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace autoheat
