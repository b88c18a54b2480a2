#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoheat/hpoint.hpp"
#include "autoheat/special_functions.hpp"

namespace autoheat {

enum class Parity { Even, Odd };

struct MaassFormData {
    double r = 0.0;
    Parity parity = Parity::Even;
    std::vector<double> coeffs;  // a_1 .. a_N, a_1 = 1
    std::string source;
    double c_norm = 1.0;  // multiplies the Hecke-normalized expansion to unit L2 norm
};

/// Restriction of a Gamma-invariant function to the horizontal line Im z = y:
/// constant + sum_n cos_coeffs[n-1] cos(2 pi n x) + sin_coeffs[n-1] sin(2 pi n x).
struct FourierRow {
    double y = 1.0;
    double constant = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    [[nodiscard]] double eval(double x) const;
    /// this += scale * other
    void axpy(double scale, const FourierRow& other);
};

/// Relative size below which the first omitted Fourier-Bessel term is dropped.
inline constexpr double kFourierCutoff = 1e-12;

struct EisensteinEval {
    cplx value;
    int terms_used = 0;
    bool underresolved = false;  // requested n_terms leaves a term above the cutoff
};

/// E(z, 1/2 + ir) with constant term y^s + phi(s) y^{1-s}, evaluated from the
/// Fourier expansion at z as given (no reduction). Negative r is accepted and
/// gives E(z, 1/2 - ir). n_terms unset selects the length automatically.
EisensteinEval eval_eisenstein(double r, const HPoint& z, std::optional<int> n_terms = std::nullopt);

/// Real unitary multiple (xi(1+2ir)/|xi(1+2ir)|) E(z, 1/2+ir); the Eisenstein
/// basis function used on the spectral grid. Requires r != 0.
double eisenstein_basis(double r, const HPoint& z);
FourierRow eisenstein_basis_row(double r, double y);

/// Hecke divisor sum tau_n = sum_{d | n} cos(r log(n / d^2)), n = 1..n_max.
std::vector<double> divisor_cosines(double r, int n_max);

/// Raw Fourier expansion of a Maass cusp form at z (no reduction). Throws
/// std::runtime_error when 2 pi N y <= r + 20 for the stored length N.
double eval_maass(const MaassFormData& f, const HPoint& z);
FourierRow maass_row(const MaassFormData& f, double y);
bool maass_decay_ok(const MaassFormData& f, double y);

/// Basis value after reduction into the fundamental domain.
double eval_maass_reduced(const MaassFormData& f, const HPoint& z);
double eisenstein_basis_reduced(double r, const HPoint& z);

inline constexpr double kResidualBasisValue = 0.97720502380583984317;  // sqrt(3/pi)

enum class SpectralKind { Cuspidal, Residual, Eisenstein };

/// Phi_xi(i) for the conjugated delta coefficients. `form` is required for
/// Cuspidal and ignored otherwise. Real for every kind in this normalization.
cplx basepoint_value(SpectralKind kind, double r, const MaassFormData* form = nullptr);

/// Laplacian residual |y^2 (f_xx + f_yy) + (1/4 + r^2) f| / |f| using
/// fourth-order five-point differences with step h.
double maass_laplacian_residual(const MaassFormData& f, const HPoint& z, double h = 1e-3);

}  // namespace autoheat
