#include "autoheat/automorphic_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace autoheat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTerms = 100000;

double cutoff_bound(double scale, double r, double y, int n) {
    const double x = kTwoPi * n * y;
    if (x <= std::abs(r) + 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    // |tau_n| <= d(n) <= 2 sqrt(n)
    return scale * std::sqrt(y) * 2.0 * std::sqrt(static_cast<double>(n)) * std::abs(bessel_k_imag(r, x));
}

// Number of terms so that the first omitted one is below kFourierCutoff.
int auto_terms(double scale, double r, double y) {
    for (int n = 1; n < kMaxTerms; ++n) {
        if (cutoff_bound(scale, r, y, n) < kFourierCutoff) {
            return n - 1;
        }
    }
    throw std::runtime_error("eisenstein: Fourier expansion does not converge at y = " + std::to_string(y));
}

struct EisensteinConstants {
    cplx xi;        // xi(1 + 2ir)
    double abs_xi;
};

EisensteinConstants eisenstein_constants(double r) {
    const cplx xi = completed_zeta_line(r);
    return {xi, std::abs(xi)};
}

}  // namespace

double FourierRow::eval(double x) const {
    double v = constant;
    const double c1 = std::cos(kTwoPi * x);
    const double s1 = std::sin(kTwoPi * x);
    double cn = 1.0;
    double sn = 0.0;
    const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double cnext = cn * c1 - sn * s1;
        sn = sn * c1 + cn * s1;
        cn = cnext;
        if (k < cos_coeffs.size()) {
            v += cos_coeffs[k] * cn;
        }
        if (k < sin_coeffs.size()) {
            v += sin_coeffs[k] * sn;
        }
    }
    return v;
}

void FourierRow::axpy(double scale, const FourierRow& other) {
    constant += scale * other.constant;
    if (cos_coeffs.size() < other.cos_coeffs.size()) {
        cos_coeffs.resize(other.cos_coeffs.size(), 0.0);
    }
    if (sin_coeffs.size() < other.sin_coeffs.size()) {
        sin_coeffs.resize(other.sin_coeffs.size(), 0.0);
    }
    for (std::size_t k = 0; k < other.cos_coeffs.size(); ++k) {
        cos_coeffs[k] += scale * other.cos_coeffs[k];
    }
    for (std::size_t k = 0; k < other.sin_coeffs.size(); ++k) {
        sin_coeffs[k] += scale * other.sin_coeffs[k];
    }
}

std::vector<double> divisor_cosines(double r, int n_max) {
    std::vector<cplx> power(n_max + 1);  // n^{ir}
    for (int n = 1; n <= n_max; ++n) {
        const double ph = r * std::log(static_cast<double>(n));
        power[n] = {std::cos(ph), std::sin(ph)};
    }
    std::vector<double> tau(n_max, 0.0);
    for (int d = 1; d <= n_max; ++d) {
        for (int n = d; n <= n_max; n += d) {
            tau[n - 1] += (power[n / d] * std::conj(power[d])).real();
        }
    }
    return tau;
}

EisensteinEval eval_eisenstein(double r, const HPoint& z, std::optional<int> n_terms) {
    if (n_terms && *n_terms < 1) {
        throw std::invalid_argument("eval_eisenstein: n_terms must be >= 1");
    }
    if (r == 0.0) {
        // E(z, 1/2) vanishes identically for SL2(Z)
        return {cplx(0.0), 0, false};
    }
    const auto [xi, abs_xi] = eisenstein_constants(r);
    const double scale = 4.0 / abs_xi;
    const double y = z.y();
    EisensteinEval out;
    out.terms_used = n_terms ? *n_terms : auto_terms(scale, r, y);
    if (n_terms) {
        out.underresolved = !(cutoff_bound(scale, r, y, *n_terms + 1) < kFourierCutoff);
    }
    const cplx s(0.5, r);
    const cplx ys = std::exp(s * std::log(y));
    const cplx phi = std::conj(xi) / xi;
    cplx value = ys + phi * std::conj(ys);

    const std::vector<double> tau = divisor_cosines(r, out.terms_used);
    double sum = 0.0;
    for (int n = out.terms_used; n >= 1; --n) {
        sum += tau[n - 1] * bessel_k_imag(r, kTwoPi * n * y) * std::cos(kTwoPi * n * z.x());
    }
    value += 4.0 / xi * std::sqrt(y) * sum;
    out.value = value;
    return out;
}

FourierRow eisenstein_basis_row(double r, double y) {
    if (r == 0.0) {
        throw std::domain_error("eisenstein_basis: r = 0 has no unitary normalization");
    }
    const auto [xi, abs_xi] = eisenstein_constants(r);
    const double scale = 4.0 / abs_xi;
    const int n = auto_terms(scale, r, y);
    FourierRow row;
    row.y = y;
    const cplx ys = std::exp(cplx(0.5, r) * std::log(y));
    row.constant = 2.0 * (xi * ys).real() / abs_xi;
    const std::vector<double> tau = divisor_cosines(r, n);
    row.cos_coeffs.resize(n);
    const double sy = scale * std::sqrt(y);
    for (int k = 1; k <= n; ++k) {
        row.cos_coeffs[k - 1] = sy * tau[k - 1] * bessel_k_imag(r, kTwoPi * k * y);
    }
    return row;
}

double eisenstein_basis(double r, const HPoint& z) {
    return eisenstein_basis_row(r, z.y()).eval(z.x());
}

bool maass_decay_ok(const MaassFormData& f, double y) {
    return kTwoPi * static_cast<double>(f.coeffs.size()) * y > f.r + 20.0;
}

FourierRow maass_row(const MaassFormData& f, double y) {
    if (!maass_decay_ok(f, y)) {
        throw std::runtime_error("eval_maass: " + std::to_string(f.coeffs.size()) +
                                 " coefficients are too few at y = " + std::to_string(y) +
                                 " (need 2 pi N y > r + 20)");
    }
    FourierRow row;
    row.y = y;
    std::vector<double>& target = f.parity == Parity::Even ? row.cos_coeffs : row.sin_coeffs;
    target.resize(f.coeffs.size());
    const double sy = f.c_norm * std::sqrt(y);
    for (std::size_t k = 1; k <= f.coeffs.size(); ++k) {
        target[k - 1] = sy * f.coeffs[k - 1] * bessel_k_imag(f.r, kTwoPi * static_cast<double>(k) * y);
    }
    return row;
}

double eval_maass(const MaassFormData& f, const HPoint& z) {
    return maass_row(f, z.y()).eval(z.x());
}

double eval_maass_reduced(const MaassFormData& f, const HPoint& z) {
    return eval_maass(f, reduce_to_fundamental_domain(z).point);
}

double eisenstein_basis_reduced(double r, const HPoint& z) {
    return eisenstein_basis(r, reduce_to_fundamental_domain(z).point);
}

cplx basepoint_value(SpectralKind kind, double r, const MaassFormData* form) {
    const HPoint i(0.0, 1.0);
    switch (kind) {
        case SpectralKind::Residual:
            return kResidualBasisValue;
        case SpectralKind::Eisenstein:
            return eisenstein_basis(r, i);
        case SpectralKind::Cuspidal:
            if (form == nullptr) {
                throw std::invalid_argument("basepoint_value: cusp point without form data");
            }
            if (form->parity == Parity::Odd) {
                return 0.0;
            }
            return eval_maass(*form, i);
    }
    return 0.0;
}

double maass_laplacian_residual(const MaassFormData& f, const HPoint& z, double h) {
    auto v = [&](double dx, double dy) { return eval_maass(f, HPoint(z.x() + dx, z.y() + dy)); };
    const double f0 = v(0.0, 0.0);
    auto second = [&](double ex, double ey) {
        return (-v(2 * h * ex, 2 * h * ey) + 16.0 * v(h * ex, h * ey) - 30.0 * f0 + 16.0 * v(-h * ex, -h * ey) -
                v(-2 * h * ex, -2 * h * ey)) /
               (12.0 * h * h);
    };
    const double lap = z.y() * z.y() * (second(1.0, 0.0) + second(0.0, 1.0));
    return std::abs(lap + (0.25 + f.r * f.r) * f0) / std::abs(f0);
}

}  // namespace autoheat
