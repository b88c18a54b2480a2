#pragma once

#include <cstdint>
#include <vector>

#include "autoheat/execution.hpp"
#include "autoheat/hpoint.hpp"

namespace autoheat {

/// Heat kernel of the hyperbolic plane (curvature -1) as a function of
/// distance,
///   p_t(rho) = sqrt(2) e^{-t/4} / (4 pi t)^{3/2}
///              int_rho^inf s e^{-s^2/4t} (cosh s - cosh rho)^{-1/2} ds.
/// With s = rho + u^2 and cosh s - cosh rho = 2 sinh(rho + u^2/2) sinh(u^2/2)
/// the integrand is bounded; it is integrated on geometric Gauss-Legendre
/// panels in u with the factor exp(-rho^2/4t - rho/2) taken out analytically.
double log_hyperbolic_heat_kernel(double t, double rho);
double hyperbolic_heat_kernel(double t, double rho);

/// log p_t tabulated on a uniform rho grid with cubic interpolation; zero
/// beyond the distance where p_t drops 80 e-folds below p_t(0).
class HeatKernelTable {
public:
    explicit HeatKernelTable(double t, double spacing = 1.0 / 256.0);
    [[nodiscard]] double operator()(double rho) const;
    [[nodiscard]] double log_value(double rho) const;
    [[nodiscard]] double t() const { return t_; }
    [[nodiscard]] double cutoff() const { return rho_max_; }

private:
    double t_;
    double h_;
    double rho_max_;
    std::vector<double> log_p_;
};

enum class Enumeration {
    Box,           // max |entry| <= bound
    FrobeniusBall  // a^2 + b^2 + c^2 + d^2 <= bound^2
};

struct OracleOptions {
    Enumeration mode = Enumeration::Box;
    double shell_tolerance = 1e-4;  // relative contribution of the outermost unit shell
    Exec exec = Exec::Parallel;
    /// At z = i in ball mode, count matrices by norm through sums of two
    /// squares instead of enumerating them.
    bool arithmetic_at_i = true;
};

struct OracleResult {
    double value = 0.0;
    double shell_contribution = 0.0;
    std::int64_t terms = 0;  // matrices summed, one per +-pair
    bool shell_warning = false;
};

/// Sum over PSL2(Z) elements with bounded entries of p_t(d(z, gamma i)).
/// Requires t in [0.2, 10] and bound >= sqrt(2).
OracleResult periodized_oracle(double t, const HPoint& z, double bound, const OracleOptions& options = {});

/// Reference: every integer quadruple with |entries| <= ceil(bound), ad - bc = 1,
/// first nonzero entry positive; p_t evaluated without the table. Serial.
OracleResult periodized_oracle_bruteforce(double t, const HPoint& z, double bound, Enumeration mode);

/// r_2(n) for n in [lo, lo + count): representations as p^2 + q^2 over Z^2.
std::vector<std::uint32_t> sum_of_two_squares_counts(std::uint64_t lo, std::uint64_t count);

/// Number of PSL2(Z) elements with a^2 + b^2 + c^2 + d^2 = m + 2.
std::uint64_t psl2_norm_count(std::uint64_t m, std::uint32_t r2_m, std::uint32_t r2_m4);

}  // namespace autoheat
