#include "autoheat/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace autoheat {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} for k = 1..12
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,     1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0, 7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0};

}  // namespace

double bessel_k_imag(double R, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("bessel_k_imag: argument must be positive, got " + std::to_string(x));
    }
    R = std::abs(R);
    if (x > 740.0) {
        return 0.0;
    }
    constexpr double half_pi = kPi / 2.0;
    const double delta_min = std::min(half_pi, 4.0 / std::max(R, 1.0));
    double alpha = R < x ? std::asin(R / x) : half_pi;
    alpha = std::min(alpha, half_pi - delta_min);
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);

    // Half-width of the analyticity strip kept for the trapezoid error bound;
    // the step makes exp(R d - 2 pi d / h) ~ e^{-40}.
    const double d = 0.5 * (half_pi - alpha);
    const double h = std::min(0.5, 2.0 * kPi * d / (R * d + 40.0));
    const double vmax = std::acosh(1.0 + 42.0 / (x * ca));
    const int n = static_cast<int>(std::ceil(vmax / h));

    const double eh = std::exp(h);
    double ek = 1.0;  // e^{kh}
    double sum = 0.5;
    for (int k = 1; k <= n; ++k) {
        ek *= eh;
        const double ch = 0.5 * (ek + 1.0 / ek);
        const double sh = 0.5 * (ek - 1.0 / ek);
        const double v = k * h;
        sum += std::exp(-x * ca * (ch - 1.0)) * std::cos(R * v - x * sa * sh);
    }
    return std::exp(-R * alpha - x * ca) * h * sum;
}

cplx zeta_euler_maclaurin(cplx s, int terms, int bernoulli_terms) {
    if (std::abs(s - 1.0) < 1e-300) {
        throw std::domain_error("zeta: pole at s = 1");
    }
    if (terms < 2 || bernoulli_terms < 0 || bernoulli_terms > static_cast<int>(kBernoulli.size())) {
        throw std::invalid_argument("zeta: bad truncation parameters");
    }
    cplx sum = 0.0;
    for (int n = terms - 1; n >= 1; --n) {
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    }
    const double N = terms;
    const double logN = std::log(N);
    const cplx Ns = std::exp(-s * logN);  // N^{-s}
    sum += N * Ns / (s - 1.0) + 0.5 * Ns;

    // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    cplx rising = s;  // s (s+1) ... (s+2k-2)
    double factorial = 2.0;
    cplx Npow = Ns / N;  // N^{-s-1}
    for (int k = 1; k <= bernoulli_terms; ++k) {
        sum += kBernoulli[k - 1] / factorial * rising * Npow;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        factorial *= static_cast<double>((2 * k + 1) * (2 * k + 2));
        Npow /= N * N;
    }
    return sum;
}

cplx zeta_line(double t) {
    if (t == 0.0) {
        throw std::domain_error("zeta_line: pole of zeta at 1 + 0i");
    }
    if (std::abs(t) > 100.0) {
        throw std::domain_error("zeta_line: |t| must not exceed 100");
    }
    return zeta_euler_maclaurin(cplx(1.0, t));
}

cplx log_gamma(cplx z) {
    if (!(z.real() > 0.0)) {
        throw std::domain_error("log_gamma: requires Re z > 0");
    }
    cplx shift = 0.0;
    while (std::abs(z) < 15.0 || z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const cplx iz = 1.0 / z;
    const cplx iz2 = iz * iz;
    cplx series = 0.0;
    cplx p = iz;
    for (int k = 1; k <= 8; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= iz2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

cplx completed_zeta_line(double r) {
    const cplx s(1.0, 2.0 * r);
    const cplx half = 0.5 * s;
    return std::exp(-half * std::log(kPi) + log_gamma(half)) * zeta_line(2.0 * r);
}

cplx scattering_phi(double r) {
    const cplx xi = completed_zeta_line(r);
    return std::conj(xi) / xi;
}

}  // namespace autoheat
