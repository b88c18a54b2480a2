#include "autoheat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "autoheat/heat_semigroup.hpp"
#include "autoheat/maass_data.hpp"
#include "autoheat/periodization.hpp"
#include "autoheat/special_functions.hpp"
#include "autoheat/synthesis.hpp"

namespace autoheat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fmt_t(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

std::vector<CoeffFn> random_fns(const VerifyContext& ctx, int count, std::uint64_t salt) {
    std::mt19937_64 rng(ctx.seed ^ salt);
    std::vector<CoeffFn> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        out.push_back(CoeffFn::random(ctx.grid, rng));
    }
    return out;
}

// Independent of bessel_k_imag: power series of K_0 (Abramowitz and Stegun 9.6.13).
double bessel_k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double harmonic = 0.0;
    double i0 = 0.0;
    double rest = 0.0;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            term *= q / (static_cast<double>(k) * k);
            harmonic += 1.0 / k;
        }
        i0 += term;
        rest += term * harmonic;
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + rest;
}

double second_difference(const std::function<double(double)>& f, double h) {
    return (-f(2 * h) + 16 * f(h) - 30 * f(0) + 16 * f(-h) - f(-2 * h)) / (12 * h * h);
}

}  // namespace

std::string CheckRow::bound_text() const {
    if (lower == -kInf) {
        return "<= " + fmt(upper);
    }
    if (upper == kInf) {
        return ">= " + fmt(lower);
    }
    return "[" + fmt(lower) + ", " + fmt(upper) + "]";
}

CheckRow check_at_most(std::string name, double measured, double bound) {
    return {std::move(name), measured, -kInf, bound, measured <= bound};
}

CheckRow check_within(std::string name, double measured, double lower, double upper) {
    return {std::move(name), measured, lower, upper, measured >= lower && measured <= upper};
}

std::vector<CheckRow> check_mu_isometry(const VerifyContext& ctx) {
    double worst = 0.0;
    for (const CoeffFn& f : random_fns(ctx, 100, 1)) {
        const CoeffFn mf = mu_apply(f);
        for (int s = -4; s <= 4; ++s) {
            const double a = norm_vs(f, SobolevIndex(s));
            const double b = norm_vs(mf, SobolevIndex(s - 2));
            worst = std::max(worst, std::abs(b - a) / a);
        }
    }
    return {check_at_most("mu_isometry", worst, 1e-12)};
}

std::vector<CheckRow> check_operator_suite(const VerifyContext& ctx) {
    const auto fs = random_fns(ctx, 40, 2);
    const SobolevIndex l2(0);
    double sym = 0.0;
    double neg = -kInf;
    for (std::size_t k = 0; k + 1 < fs.size(); k += 2) {
        const CoeffFn& f = fs[k];
        const CoeffFn& g = fs[k + 1];
        const CoeffFn mf = m_operator_apply(f);
        const cplx lhs = pairing(mf, g);
        const cplx rhs = pairing(f, m_operator_apply(g));
        sym = std::max(sym, std::abs(lhs - rhs) / (norm_vs(mf, l2) * norm_vs(g, l2)));
        neg = std::max(neg, pairing(mf, f).real() / std::pow(norm_vs(f, l2), 2));
    }
    double bound = 0.0;
    double round_trip = 0.0;
    for (double C : {0.5, 1.0, 3.0}) {
        for (const CoeffFn& f : fs) {
            const CoeffFn rf = resolvent_apply(C, f);
            const double nf = norm_vs(f, l2);
            bound = std::max(bound, C * norm_vs(rf, l2) / nf);
            const CoeffFn back = m_operator_apply(rf) - cplx(C) * rf;
            round_trip = std::max(round_trip, norm_vs(back - f, l2) / nf);
        }
    }
    return {
        check_at_most("m_symmetry", sym, 1e-13),
        check_at_most("m_dissipative", neg, 0.0),
        check_at_most("resolvent_bound", bound, 1.0),
        check_at_most("resolvent_round_trip", round_trip, 1e-13),
    };
}

std::vector<CheckRow> check_semigroup_suite(const VerifyContext& ctx) {
    const auto fs = random_fns(ctx, 20, 3);
    double identity = 0.0;
    double law = 0.0;
    double contraction = 0.0;
    for (const CoeffFn& f : fs) {
        const double nf = norm_vs(f, SobolevIndex(0));
        identity = std::max(identity, norm_vs(semigroup_apply(0.0, f) - f, SobolevIndex(0)) / nf);
        for (auto [s, t] : {std::pair{0.1, 0.3}, std::pair{0.5, 0.5}, std::pair{1.0, 2.0}, std::pair{0.01, 4.0}}) {
            const CoeffFn a = semigroup_apply(s, semigroup_apply(t, f));
            const CoeffFn b = semigroup_apply(s + t, f);
            law = std::max(law, norm_vs(a - b, SobolevIndex(0)) / nf);
        }
        for (int s = -4; s <= 4; s += 2) {
            for (double t : {0.01, 0.1, 1.0, 10.0}) {
                contraction = std::max(contraction, norm_vs(semigroup_apply(t, f), SobolevIndex(s)) /
                                                        norm_vs(f, SobolevIndex(s)));
            }
        }
    }
    // strong continuity at 0 on a smooth element
    const CoeffFn f = semigroup_apply(1.0, delta_coefficients(ctx.grid));
    std::vector<double> gaps;
    for (double t : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        gaps.push_back(norm_vs(semigroup_apply(t, f) - f, SobolevIndex(0)));
    }
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
        worst_ratio = std::max(worst_ratio, gaps[k + 1] / gaps[k]);
    }
    const double last = gaps.back() / norm_vs(f, SobolevIndex(0));
    return {
        check_at_most("g0_identity", identity, 0.0),
        check_at_most("semigroup_law", law, 1e-13),
        check_at_most("contraction", contraction, 1.0),
        check_at_most("strong_continuity_ratio", worst_ratio, 0.5),
        check_at_most("strong_continuity_gap", last, 1e-3),
    };
}

std::vector<CheckRow> check_heat_equation(const VerifyContext& ctx) {
    const double r1 = heat_equation_residual(ctx.grid, 1.0, 1e-2);
    const double r2 = heat_equation_residual(ctx.grid, 1.0, 5e-3);
    const double r3 = heat_equation_residual(ctx.grid, 1.0, 1e-3);
    const CoeffFn u = heat_coefficients(1.0, ctx.grid).coeffs;
    const double scale = norm_vs(m_operator_apply(u), kResidualIndex);
    return {
        check_within("heat_residual_ratio", r1 / r2, 3.5, 4.5),
        check_at_most("heat_residual_relative", r3 / scale, 1e-5),
    };
}

std::vector<CheckRow> check_initial_condition(const VerifyContext& ctx) {
    const std::vector<double> ts = {1.0, 0.5, 0.1, 0.01, 1e-3, 1e-4};
    const CoeffFn fd = delta_coefficients(ctx.grid);
    const double lip = norm_vs(m_operator_apply(fd), SobolevIndex(-kEll));
    double worst_ratio = 0.0;
    double worst_bound = 0.0;
    double prev = kInf;
    for (double t : ts) {
        const double gap = initial_condition_gap(ctx.grid, t);
        worst_ratio = std::max(worst_ratio, gap / prev);
        worst_bound = std::max(worst_bound, gap / (t * lip));
        prev = gap;
    }
    // strict decrease: every ratio below one
    return {
        check_at_most("gap_decrease_ratio", worst_ratio, 1.0 - 1e-12),
        check_at_most("gap_over_lipschitz", worst_bound, 1.0),
    };
}

std::vector<CheckRow> check_uniqueness(const VerifyContext& ctx) {
    const auto fs = random_fns(ctx, 200, 4);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < fs.size(); k += 2) {
        const CoeffFn diff = fs[k] - fs[k + 1];
        const double d0 = norm_vs(diff, kResidualIndex);
        for (double t : {0.1, 1.0, 10.0}) {
            worst = std::max(worst, acp_uniqueness_gap(fs[k], fs[k + 1], t, kResidualIndex) / d0);
        }
    }
    std::vector<CheckRow> rows = {check_at_most("difference_contraction", worst, 1.0)};
    const EulerStudy study = euler_convergence(fs[0], 0.5, kResidualIndex, 100, 4);
    for (std::size_t k = 0; k < study.ratios.size(); ++k) {
        rows.push_back(check_within("euler_ratio_n" + std::to_string(study.steps[k]), study.ratios[k], 1.8, 2.2));
    }
    return rows;
}

std::vector<CheckRow> check_oracle_agreement(const VerifyContext& ctx) {
    const std::vector<std::pair<const char*, HPoint>> zs = {
        {"i", HPoint(0.0, 1.0)}, {"2i", HPoint(0.0, 2.0)}, {"0.25+1.3i", HPoint(0.25, 1.3)}};
    std::vector<CheckRow> rows;
    OracleOptions opts;
    opts.exec = ctx.exec;
    opts.shell_tolerance = ctx.oracle_shell;
    SynthesisOptions sopts;
    sopts.exec = ctx.exec;
    for (double t : {0.5, 1.0, 2.0}) {
        for (const auto& [label, z] : zs) {
            const double spectral = evaluate_heat_kernel(t, z, ctx.grid, sopts).value.real();
            const double oracle = periodized_oracle(t, z, ctx.oracle_norm_bound, opts).value;
            rows.push_back(check_at_most("oracle_t" + fmt_t(t) + "_z" + label, std::abs(spectral - oracle) / std::abs(oracle),
                                         ctx.oracle_agreement));
        }
    }
    return rows;
}

std::vector<CheckRow> check_long_time(const VerifyContext& ctx) {
    const HPoint i(0.0, 1.0);
    const double limit = 3.0 / kPi;
    SynthesisOptions sopts;
    sopts.exec = ctx.exec;
    const double spectral = evaluate_heat_kernel(8.0, i, ctx.grid, sopts).value.real();
    OracleOptions opts;
    opts.mode = Enumeration::FrobeniusBall;
    opts.exec = ctx.exec;
    const double oracle = periodized_oracle(8.0, i, 30000.0, opts).value;
    return {
        check_at_most("long_time_spectral", std::abs(spectral - limit), 2e-2),
        check_at_most("long_time_oracle", std::abs(oracle - limit), 2e-2),
    };
}

std::vector<CheckRow> check_smoothness(const VerifyContext& ctx) {
    std::vector<int> s_list;
    for (int s = 0; s <= 20; s += 2) {
        s_list.push_back(s);
    }
    const SmoothnessProfile smooth = smoothness_profile(1.0, s_list, ctx.grid);
    const SmoothnessProfile rough = smoothness_profile(0.0, {0}, ctx.grid);
    const double growth = rough.doubled_norms[0] / rough.norms[0] - 1.0;
    return {
        check_at_most("profile_t1_tail_change", smooth.max_relative_change, kStabilityTolerance),
        check_within("profile_t0_growth", growth, 0.1, kInf),
    };
}

std::vector<CheckRow> check_parseval(const VerifyContext& ctx) {
    // bump in log y supported on 1.05 <= y <= 8, where every x in [-1/2, 1/2] lies in F
    const double a = std::log(1.05);
    const double b = std::log(8.0);
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const std::function<double(const HPoint&)> bump = [=](const HPoint& z) {
        const double u = (std::log(z.y()) - c) / hw;
        return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    };
    AnalyzeOptions opts;
    opts.exec = ctx.exec;
    const AnalyzeResult res = analyze(bump, ctx.grid, opts);
    const double spectral = norm_vs(res.coeffs, SobolevIndex(0));
    const DomainQuadrature q = fundamental_domain_quadrature(opts.quadrature);
    const double physical = std::sqrt(integrate(q, [&](const HPoint& z) { return bump(z) * bump(z); }));
    return {check_at_most("parseval_relative", std::abs(spectral - physical) / physical, 1e-2)};
}

std::vector<CheckRow> check_special_functions(const VerifyContext& ctx) {
    constexpr double k0_frozen = 0.4210244382;
    std::vector<CheckRow> rows = {
        check_at_most("k0_frozen", std::abs(bessel_k_imag(0.0, 1.0) - k0_frozen), 1e-10),
        check_at_most("k0_series", std::abs(bessel_k_imag(0.0, 1.0) - bessel_k0_series(1.0)), 1e-10),
    };
    const HPoint z(0.3, 1.1);
    for (double r : {1.0, 5.0}) {
        const cplx a = eval_eisenstein(r, z).value;
        const cplx b = eval_eisenstein(r, z.invert()).value;
        rows.push_back(check_at_most("eisenstein_inversion_r" + fmt_t(r), std::abs(a - b) / std::abs(a), 1e-8));
    }
    if (ctx.forms.empty()) {
        rows.push_back({"maass_laplacian", kInf, -kInf, kLaplacianTolerance, false});
    } else {
        rows.push_back(check_at_most("maass_laplacian", maass_laplacian_residual(ctx.forms.front(), laplacian_check_point()),
                                     kLaplacianTolerance));
    }
    return rows;
}

std::vector<CheckRow> check_mass(const VerifyContext& ctx) {
    std::vector<CheckRow> rows;
    for (double t : {0.5, 1.0, 2.0}) {
        rows.push_back(check_at_most("mass_t" + fmt_t(t), std::abs(mass_check(t, ctx.grid).mass - 1.0), 1e-6));
    }
    return rows;
}

std::vector<CheckRow> check_translation(const VerifyContext& ctx) {
    // synthesis of M f against the hyperbolic Laplacian of the synthesis of f
    const CoeffFn f = heat_coefficients(1.0, ctx.grid).coeffs;
    const CoeffFn mf = m_operator_apply(f);
    constexpr double h = 1e-2;
    double worst = 0.0;
    for (const HPoint& z : {HPoint(0.0, 1.2), HPoint(0.3, 1.3), HPoint(-0.2, 1.5), HPoint(0.1, 2.0), HPoint(0.4, 1.1)}) {
        auto val = [&](double dx, double dy) { return synthesize(f, HPoint(z.x() + dx, z.y() + dy), ctx.exec).value().real(); };
        const double lap = z.y() * z.y() * (second_difference([&](double d) { return val(d, 0.0); }, h) +
                                         second_difference([&](double d) { return val(0.0, d); }, h));
        const double direct = synthesize(mf, z, ctx.exec).value().real();
        worst = std::max(worst, std::abs(lap - direct) / std::abs(direct));
    }
    return {check_at_most("translation_laplacian", worst, 1e-5)};
}

std::vector<CheckRow> check_laplace_resolvent(const VerifyContext& ctx) {
    const auto fs = random_fns(ctx, 4, 5);
    double worst = 0.0;
    for (double C : {0.5, 1.0, 3.0}) {
        for (const CoeffFn& f : fs) {
            const CoeffFn exact = resolvent_apply(C, f);
            const CoeffFn approx = laplace_resolvent(C, f, 60.0 / C, 40, 16);
            worst = std::max(worst, norm_vs(approx - exact, SobolevIndex(0)) / norm_vs(exact, SobolevIndex(0)));
        }
    }
    return {check_at_most("laplace_resolvent", worst, 2e-2)};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"sobolev", "semigroup", "heat", "oracle", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckRow> run_suite(const std::string& name, const VerifyContext& ctx) {
    using Check = std::vector<CheckRow> (*)(const VerifyContext&);
    std::vector<Check> checks;
    const bool all = name == "all";
    if (all || name == "sobolev") {
        checks.insert(checks.end(), {check_mu_isometry, check_operator_suite, check_special_functions, check_parseval});
    }
    if (all || name == "semigroup") {
        checks.insert(checks.end(), {check_semigroup_suite, check_uniqueness, check_laplace_resolvent});
    }
    if (all || name == "heat") {
        checks.insert(checks.end(),
                      {check_heat_equation, check_initial_condition, check_smoothness, check_mass, check_translation});
    }
    if (all || name == "oracle") {
        checks.insert(checks.end(), {check_oracle_agreement, check_long_time});
    }
    if (checks.empty()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    std::vector<CheckRow> rows;
    for (Check c : checks) {
        auto part = c(ctx);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

}  // namespace autoheat
