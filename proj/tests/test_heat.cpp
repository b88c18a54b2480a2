#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "autoheat/maass_data.hpp"
#include "autoheat/periodization.hpp"
#include "autoheat/synthesis.hpp"

using namespace autoheat;

namespace {

GridPtr default_grid() {
    static const GridPtr g = build_grid(load_maass_data(AUTOHEAT_TEST_DATA), 12.0, 4);
    return g;
}

}  // namespace

TEST_SUITE("heat_semigroup") {
    TEST_CASE("preconditions") {
        const GridPtr g = default_grid();
        CHECK_THROWS_AS(heat_coefficients(-1.0, g), std::invalid_argument);
        CHECK_THROWS_AS(semigroup_apply(-0.1, CoeffFn::zero(g)), std::invalid_argument);
        CHECK_THROWS_AS(heat_equation_residual(g, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(implicit_euler(CoeffFn::zero(g), 1.0, 0), std::invalid_argument);
        CHECK(heat_factor(-1000.0, 1.0) == 0.0);
    }

    TEST_CASE("heat coefficients start at the delta") {
        const GridPtr g = default_grid();
        const CoeffFn d = delta_coefficients(g);
        const CoeffFn u0 = heat_coefficients(0.0, g).coeffs;
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(u0[i] == d[i]);
        }
        CHECK(initial_condition_gap(g, 1e-6) < initial_condition_gap(g, 1e-5));
    }

    TEST_CASE("implicit Euler is first order") {
        const GridPtr g = default_grid();
        const CoeffFn f = heat_coefficients(0.1, g).coeffs;
        const EulerStudy s = euler_convergence(f, 0.5, SobolevIndex(-4), 50, 3);
        REQUIRE(s.ratios.size() == 2);
        for (double r : s.ratios) {
            CHECK(r == doctest::Approx(2.0).epsilon(0.05));
        }
    }

    TEST_CASE("Laplace transform of the semigroup is the resolvent") {
        const GridPtr g = default_grid();
        std::mt19937_64 rng(11);
        const CoeffFn f = CoeffFn::random(g, rng);
        const CoeffFn exact = resolvent_apply(1.0, f);
        const CoeffFn approx = laplace_resolvent(1.0, f, 60.0, 40, 16);
        CHECK(norm_vs(approx - exact, SobolevIndex(0)) <= 2e-2 * norm_vs(exact, SobolevIndex(0)));
    }
}

TEST_SUITE("synthesis") {
    TEST_CASE("t = 0 is rejected with the precondition in the message") {
        CHECK_THROWS_WITH_AS(evaluate_heat_kernel(0.0, HPoint(0, 1), default_grid()), doctest::Contains("t > 0"),
                             std::invalid_argument);
    }

    TEST_CASE("frozen references at t = 2") {
        // independent quadrature in Python of the Eisenstein integral (about 3e-5 accurate)
        const GridPtr g = default_grid();
        CHECK(evaluate_heat_kernel(2.0, HPoint(0, 1), g).value.real() == doctest::Approx(1.0334700191).epsilon(5e-5));
        CHECK(evaluate_heat_kernel(2.0, HPoint(0, 2), g).value.real() == doctest::Approx(1.0145640785).epsilon(5e-5));
        CHECK(evaluate_heat_kernel(2.0, HPoint(0.25, 1.3), g).value.real() ==
              doctest::Approx(1.0309607716).epsilon(5e-5));
        // box periodization with entries up to 250
        CHECK(evaluate_heat_kernel(2.0, HPoint(0, 2), g).value.real() == doctest::Approx(1.0145543506).epsilon(2e-5));
    }

    TEST_CASE("agrees with periodization at t = 0.5") {
        const GridPtr g = default_grid();
        for (const HPoint& z : {HPoint(0, 1), HPoint(0, 2), HPoint(0.25, 1.3), HPoint(-0.4, 0.95)}) {
            const double s = evaluate_heat_kernel(0.5, z, g).value.real();
            const double o = periodized_oracle(0.5, z, 25.0).value;
            CHECK(s == doctest::Approx(o).epsilon(1e-7));
        }
    }

    TEST_CASE("invariance of the synthesized kernel") {
        const GridPtr g = default_grid();
        const HPoint z(0.3, 1.1);
        const double a = evaluate_heat_kernel(1.0, z, g).value.real();
        CHECK(evaluate_heat_kernel(1.0, z.invert(), g).value.real() == doctest::Approx(a).epsilon(1e-13));
        CHECK(evaluate_heat_kernel(1.0, z.translate(-3.0), g).value.real() == doctest::Approx(a).epsilon(1e-13));
    }

    TEST_CASE("serial and parallel synthesis agree bitwise") {
        const CoeffFn u = heat_coefficients(0.7, default_grid()).coeffs;
        for (const HPoint& z : {HPoint(0, 1), HPoint(0.3, 1.7)}) {
            CHECK(synthesize(u, z, Exec::Serial).value() == synthesize(u, z, Exec::Parallel).value());
        }
    }

    TEST_CASE("tail warning on a coarse grid") {
        const GridPtr coarse = build_grid({}, 2.0, 1);
        const SynthesisReport r = evaluate_heat_kernel(0.5, HPoint(0, 1), coarse);
        CHECK(r.tail_warning);
        CHECK(r.tail_estimate > 0.0);
        CHECK_FALSE(evaluate_heat_kernel(0.5, HPoint(0, 1), default_grid()).tail_warning);
    }

    TEST_CASE("total mass is one") {
        const MassCheck m = mass_check(1.0, default_grid());
        CHECK(m.mass == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(m.pairing == doctest::Approx(std::sqrt(3.0 / std::numbers::pi)).epsilon(1e-10));
    }

    TEST_CASE("Sobolev embedding on a patch") {
        const EmbeddingCheck e = embedding_check(0.05, default_grid());
        CHECK(e.sobolev_tail > 0.0);
        CHECK(e.ratio < 10.0);
    }

    TEST_CASE("long-time limit") {
        const double v = evaluate_heat_kernel(8.0, HPoint(0, 1), default_grid()).value.real();
        CHECK(std::abs(v - 3.0 / std::numbers::pi) <= 2e-2);
    }
}
