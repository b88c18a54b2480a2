#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "autoheat/fundamental_domain.hpp"
#include "autoheat/hpoint.hpp"
#include "autoheat/quadrature.hpp"

using namespace autoheat;

TEST_SUITE("geometry") {
    TEST_CASE("HPoint domain") {
        CHECK_THROWS_AS(HPoint(0.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(HPoint(0.0, -1.0), std::domain_error);
        const HPoint w = HPoint(0.3, 1.1).invert();
        const std::complex<double> expect = -1.0 / std::complex<double>(0.3, 1.1);
        CHECK(w.x() == doctest::Approx(expect.real()).epsilon(1e-15));
        CHECK(w.y() == doctest::Approx(expect.imag()).epsilon(1e-15));
    }

    TEST_CASE("reduction lands in F and records the matrix") {
        for (const HPoint& p : {HPoint(0.3, 0.01), HPoint(-7.9, 0.2), HPoint(0.49, 0.87), HPoint(12.0, 3.0)}) {
            const Reduction r = reduce_to_fundamental_domain(p);
            CHECK(in_fundamental_domain(r.point, 1e-12));
            CHECK(r.gamma.a * r.gamma.d - r.gamma.b * r.gamma.c == 1);
            const HPoint q = r.gamma.act(p);
            CHECK(q.x() == doctest::Approx(r.point.x()).epsilon(1e-9));
            CHECK(q.y() == doctest::Approx(r.point.y()).epsilon(1e-9));
        }
    }

    TEST_CASE("hyperbolic distance") {
        CHECK(cosh_distance(HPoint(0, 1), HPoint(0, 2)) == doctest::Approx(1.25).epsilon(1e-15));
        CHECK(cosh_distance(HPoint(0.2, 1.3), HPoint(0.2, 1.3)) == doctest::Approx(1.0));
    }

    TEST_CASE("Gauss-Legendre exactness") {
        const QuadratureRule& g = gauss_legendre(10);
        for (int k = 0; k < 20; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                s += g.weights[i] * std::pow(g.nodes[i], k);
            }
            CHECK(s == doctest::Approx(k % 2 ? 0.0 : 2.0 / (k + 1)).epsilon(1e-14));
        }
    }

    TEST_CASE("pairwise sum is independent of chunking") {
        std::vector<double> v(1000);
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = 1.0 / (1.0 + static_cast<double>(i));
        }
        const double a = pairwise_sum(v);
        CHECK(a == pairwise_sum(v));
        CHECK(a == doctest::Approx(7.485470860550345).epsilon(1e-14));
    }

    TEST_CASE("fundamental domain volume") {
        const DomainQuadrature capped = fundamental_domain_quadrature();
        CHECK(capped.volume() == doctest::Approx(std::numbers::pi / 3).epsilon(1e-13));
        FundamentalDomainSpec spec;
        spec.cusp_cap_panels = 0;
        const DomainQuadrature open = fundamental_domain_quadrature(spec);
        CHECK(open.volume() == doctest::Approx(std::numbers::pi / 3 - 0.1).epsilon(1e-13));
        // int over 1 < y < 10 of y dmu = log 10
        CHECK(integrate(open, [](const HPoint& z) { return z.y() >= 1.0 ? z.y() : 0.0; }) ==
              doctest::Approx(std::log(10.0)).epsilon(1e-12));
    }
}
