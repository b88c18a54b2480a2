#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "autoheat/special_functions.hpp"

using namespace autoheat;

namespace {

struct KCase {
    double R, x, value;
};

// mpmath 40 digits, scripts/reference_values.py
constexpr KCase kBessel[] = {
    {0, 0.01, 4.7212447301610949},       {0, 0.5, 0.92441907122766586},     {0, 3, 0.034739504386279248},
    {0, 10, 1.7780062316167652e-5},      {0, 25, 3.4641615622131144e-12},   {1, 0.01, -0.50063371682748455},
    {1, 0.5, 0.48339609004387797},       {1, 3, 0.030008658928584475},      {1, 10, 1.6950735948481494e-5},
    {1, 25, 3.3968616122007011e-12},     {5, 0.01, -0.00038948309112824174}, {5, 0.5, -0.00042411714808406799},
    {5, 3, 0.00037941674688920079},      {5, 10, 5.278121765149122e-6},     {5, 25, 2.1181862554603335e-12},
    {9.5, 0.01, 4.4433106099550288e-8},  {9.5, 0.5, 1.7481875785946533e-7}, {9.5, 3, 1.0126453521448008e-7},
    {9.5, 10, 1.7139807709756301e-7},    {9.5, 25, 5.780718743793042e-13},  {13.7, 0.01, 2.9221803030270731e-10},
    {13.7, 0.5, -2.7131375823526371e-10}, {13.7, 3, -2.9801002407457583e-10}, {13.7, 10, 1.0951483160889024e-10},
    {13.7, 25, 7.9611289475268787e-14},
};

}  // namespace

TEST_SUITE("special_functions") {
    TEST_CASE("K_iR matches mpmath") {
        for (const KCase& c : kBessel) {
            CAPTURE(c.R);
            CAPTURE(c.x);
            // absolute scale e^{-pi R / 2} is the natural size of K_iR for x < R
            const double scale = std::max(std::abs(c.value), std::exp(-M_PI * c.R / 2) * 1e-3);
            CHECK(std::abs(bessel_k_imag(c.R, c.x) - c.value) <= 1e-11 * scale);
        }
    }

    TEST_CASE("K_iR is even in R and rejects x <= 0") {
        CHECK(bessel_k_imag(-3.0, 2.0) == doctest::Approx(bessel_k_imag(3.0, 2.0)).epsilon(1e-15));
        CHECK_THROWS_AS(bessel_k_imag(1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(bessel_k_imag(1.0, -1.0), std::domain_error);
    }

    TEST_CASE("zeta on Re s = 1") {
        struct Z {
            double t, re, im;
        };
        for (const Z& z : {Z{0.5, 0.57843302109931117, -1.9635494964529788},
                           Z{2, 0.59816556976238174, -0.35185474521784529},
                           Z{10, 1.3902873132374014, -0.10978515306630206},
                           Z{24, 0.88604085213734028, -0.21603017547000288}}) {
            const cplx v = zeta_line(z.t);
            CHECK(std::abs(v - cplx(z.re, z.im)) <= 1e-12 * std::abs(cplx(z.re, z.im)));
            CHECK(std::abs(zeta_line(-z.t) - std::conj(v)) <= 1e-14);
        }
        CHECK_THROWS_AS(zeta_line(0.0), std::domain_error);
        CHECK_THROWS_AS(zeta_line(150.0), std::domain_error);
    }

    TEST_CASE("exp log Gamma") {
        struct G {
            cplx z;
            double re, im;
        };
        for (const G& g : {G{{0.5, 3.0}, -3.7934504504362232, 0.30981927108643917},
                           G{{1.0, 12.0}, -16.688164063440087, 18.597331905692437},
                           G{{5.0, -2.0}, 2.7487017561338027, -3.0738434100497008}}) {
            const cplx ref = std::exp(cplx(g.re, g.im));
            CHECK(std::abs(std::exp(log_gamma(g.z)) - ref) <= 1e-12 * std::abs(ref));
        }
    }

    TEST_CASE("scattering coefficient is unimodular") {
        for (double r : {0.1, 1.0, 5.0, 12.0, 30.0}) {
            CHECK(std::abs(scattering_phi(r)) == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}
