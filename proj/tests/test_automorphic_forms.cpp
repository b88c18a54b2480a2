#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "autoheat/automorphic_forms.hpp"
#include "autoheat/maass_data.hpp"

using namespace autoheat;

TEST_SUITE("automorphic_forms") {
    TEST_CASE("Eisenstein series is modular") {
        for (double r : {0.7, 3.0, 11.0}) {
            const HPoint z(0.21, 1.05);
            const cplx e = eval_eisenstein(r, z).value;
            CHECK(std::abs(eval_eisenstein(r, z.translate(1.0)).value - e) <= 1e-12 * std::abs(e));
            CHECK(std::abs(eval_eisenstein(r, z.invert()).value - e) <= 1e-10 * std::abs(e));
        }
    }

    TEST_CASE("negative r conjugates") {
        const HPoint z(0.1, 1.4);
        CHECK(std::abs(eval_eisenstein(-2.5, z).value - std::conj(eval_eisenstein(2.5, z).value)) <= 1e-13);
    }

    TEST_CASE("unitary basis is the real rotation of E") {
        for (double r : {0.5, 4.0, 9.0}) {
            const HPoint z(-0.3, 1.2);
            const cplx xi = completed_zeta_line(r);
            const cplx rotated = xi / std::abs(xi) * eval_eisenstein(r, z).value;
            CHECK(std::abs(rotated.imag()) <= 1e-12 * std::abs(rotated));
            CHECK(eisenstein_basis(r, z) == doctest::Approx(rotated.real()).epsilon(1e-12));
        }
        CHECK_THROWS_AS(eisenstein_basis(0.0, HPoint(0, 1)), std::domain_error);
    }

    TEST_CASE("Fourier rows agree with pointwise evaluation") {
        const FourierRow row = eisenstein_basis_row(6.0, 1.3);
        for (double x : {-0.5, -0.1, 0.0, 0.37}) {
            CHECK(row.eval(x) == doctest::Approx(eisenstein_basis(6.0, HPoint(x, 1.3))).epsilon(1e-12));
        }
        const auto forms = load_maass_data(AUTOHEAT_TEST_DATA);
        const FourierRow m = maass_row(forms[2], 1.3);
        CHECK(m.eval(0.21) == doctest::Approx(eval_maass(forms[2], HPoint(0.21, 1.3))).epsilon(1e-12));
    }

    TEST_CASE("Maass forms are modular, with parity") {
        const auto forms = load_maass_data(AUTOHEAT_TEST_DATA);
        const HPoint z(0.3, 1.1);
        for (const auto& f : forms) {
            const double v = eval_maass_reduced(f, z);
            CHECK(std::abs(eval_maass_reduced(f, z.invert()) - v) <= 1e-10 * std::max(1.0, std::abs(v)));
            const double mirrored = eval_maass_reduced(f, HPoint(-0.3, 1.1));
            CHECK(mirrored == doctest::Approx(f.parity == Parity::Even ? v : -v).epsilon(1e-12));
        }
        CHECK(basepoint_value(SpectralKind::Cuspidal, forms[0].r, &forms[0]) == cplx(0.0));
        CHECK_THROWS(eval_maass(forms[0], HPoint(0.0, 0.05)));
    }

    TEST_CASE("divisor cosines") {
        const auto tau = divisor_cosines(2.0, 6);
        // tau_1 = 1; tau_p = 2 cos(r log p)
        CHECK(tau[0] == doctest::Approx(1.0));
        CHECK(tau[2] == doctest::Approx(2.0 * std::cos(2.0 * std::log(3.0))).epsilon(1e-14));
        CHECK(tau[5] == doctest::Approx(tau[1] * tau[2]).epsilon(1e-13));
    }
}
