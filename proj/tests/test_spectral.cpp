#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "autoheat/maass_data.hpp"
#include "autoheat/sobolev_spaces.hpp"

using namespace autoheat;

namespace {

const std::vector<MaassFormData>& bundled() {
    static const auto forms = load_maass_data(AUTOHEAT_TEST_DATA);
    return forms;
}

}  // namespace

TEST_SUITE("spectral_model") {
    TEST_CASE("eigenvalues and weights") {
        const SpectralPoint c = make_cusp_point(bundled()[0], 0);
        CHECK(eigenvalue(c) == doctest::Approx(-91.1413).epsilon(1e-6));
        CHECK(sobolev_weight(c, SobolevIndex(2)) == doctest::Approx(8490.0).epsilon(1e-4));
        CHECK(sobolev_weight(c, SobolevIndex(-2)) == doctest::Approx(1.0 / 8490.0).epsilon(1e-4));
        const SpectralPoint res = make_residual_point();
        CHECK(eigenvalue(res) == 0.0);
        CHECK(sobolev_weight(res, SobolevIndex(7)) == 1.0);
        CHECK(eigenvalue(make_eisenstein_point(0.5)) == -0.5);
        CHECK_THROWS_AS(make_eisenstein_point(0.0), std::domain_error);
        CHECK(res.basepoint_value.real() == doctest::Approx(std::sqrt(3.0 / std::numbers::pi)).epsilon(1e-15));
    }

    TEST_CASE("grid layout") {
        const GridPtr g = build_grid(bundled(), 12.0, 4);
        CHECK(g->cusp_count() == 1);
        CHECK(g->points()[g->residual_index()].kind == SpectralKind::Residual);
        CHECK(g->size() == g->eisenstein_begin() + 4 * 32);
        double sum = 0.0;
        double prev = 0.0;
        for (std::size_t i = g->eisenstein_begin(); i < g->size(); ++i) {
            sum += g->weights()[i];
            CHECK(g->points()[i].r > prev);
            prev = g->points()[i].r;
        }
        CHECK(sum == doctest::Approx(12.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
        const GridPtr d = with_r_max(*g, 24.0);
        CHECK(d->cusp_count() == 8);
        CHECK(d->r_max() == 24.0);
    }

    TEST_CASE("grid preconditions") {
        CHECK_THROWS_AS(build_grid(bundled(), 0.0, 4), std::invalid_argument);
        CHECK_THROWS_AS(build_grid(bundled(), 12.0, 0), std::invalid_argument);
        auto dup = bundled();
        dup.push_back(dup[0]);
        CHECK_THROWS_AS(build_grid(dup, 12.0, 4), std::invalid_argument);
    }
}

TEST_SUITE("sobolev_spaces") {
    TEST_CASE("coefficient function validation") {
        const GridPtr g = build_grid(bundled(), 12.0, 4);
        CHECK_THROWS_AS(CoeffFn(g, std::vector<cplx>(3)), std::invalid_argument);
        std::vector<cplx> v(g->size());
        v[5] = std::nan("");
        CHECK_THROWS_AS(CoeffFn(g, v), std::invalid_argument);
        const GridPtr other = build_grid(bundled(), 12.0, 4);
        CHECK_THROWS_AS(pairing(CoeffFn::zero(g), CoeffFn::zero(other)), std::invalid_argument);
        CHECK_THROWS_AS(resolvent_apply(0.0, CoeffFn::zero(g)), std::invalid_argument);
    }

    TEST_CASE("norms and duality") {
        const GridPtr g = build_grid(bundled(), 12.0, 4);
        std::mt19937_64 rng(7);
        const CoeffFn f = CoeffFn::random(g, rng);
        const CoeffFn h = CoeffFn::random(g, rng);
        // |<f, h>| <= ||f||_s ||h||_{-s}
        for (int s : {-3, 0, 2}) {
            CHECK(std::abs(pairing(f, h)) <= norm_vs(f, SobolevIndex(s)) * norm_vs(h, SobolevIndex(-s)));
        }
        CHECK(norm_vs(mu_inverse_apply(mu_apply(f)) - f, SobolevIndex(0)) <= 1e-14 * norm_vs(f, SobolevIndex(0)));
        CHECK(pairing_vs(f, f, SobolevIndex(1)).real() ==
              doctest::Approx(std::pow(norm_vs(f, SobolevIndex(1)), 2)).epsilon(1e-13));
    }

    TEST_CASE("analysis of a constant") {
        const GridPtr g = build_grid(bundled(), 12.0, 4);
        const AnalyzeResult a = analyze([](const HPoint&) { return 1.0; }, g);
        // <1, Phi_0> = sqrt(3/pi) vol(F) = sqrt(pi/3)
        CHECK(a.coeffs[g->residual_index()].real() == doctest::Approx(std::sqrt(std::numbers::pi / 3)).epsilon(1e-10));
        CHECK(std::abs(a.coeffs[0]) <= 1e-10);
        double eis = 0.0;
        for (std::size_t i = g->eisenstein_begin(); i < g->size(); ++i) {
            eis = std::max(eis, std::abs(a.coeffs[i]));
        }
        CHECK(eis <= 1e-6);
        CHECK_FALSE(a.warning);
    }

    TEST_CASE("serial and parallel analysis agree bitwise") {
        const GridPtr g = build_grid(bundled(), 12.0, 2);
        auto fn = [](const HPoint& z) { return std::exp(-z.y()) * (1.0 + std::cos(2 * std::numbers::pi * z.x())); };
        AnalyzeOptions serial;
        serial.exec = Exec::Serial;
        AnalyzeOptions parallel;
        parallel.exec = Exec::Parallel;
        const CoeffFn a = analyze(fn, g, serial).coeffs;
        const CoeffFn b = analyze(fn, g, parallel).coeffs;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i] == b[i]);
        }
    }
}
