#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "autoheat/maass_data.hpp"

using namespace autoheat;

namespace {

std::string bundled_text() {
    std::ifstream in(AUTOHEAT_TEST_DATA);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Header plus the form record starting at the k-th "form" line of the bundled file.
std::string single_form(int k) {
    std::istringstream in(bundled_text());
    std::string line;
    std::string out = std::string(kMaassHeader) + "\n";
    int seen = -1;
    while (std::getline(in, line)) {
        if (line.rfind("form ", 0) == 0) {
            ++seen;
        }
        if (seen == k) {
            out += line + "\n";
        }
    }
    return out;
}

std::string replace_first(std::string s, const std::string& from, const std::string& to) {
    s.replace(s.find(from), from.size(), to);
    return s;
}

}  // namespace

TEST_SUITE("maass_data") {
    TEST_CASE("bundled data loads and validates") {
        const auto forms = load_maass_data(AUTOHEAT_TEST_DATA);
        REQUIRE(forms.size() == 8);
        CHECK(forms[0].r == doctest::Approx(9.53369526135).epsilon(1e-11));
        CHECK(forms[0].parity == Parity::Odd);
        CHECK(forms[2].r == doctest::Approx(13.77975135189).epsilon(1e-11));
        CHECK(forms[2].parity == Parity::Even);
        for (const auto& f : forms) {
            CHECK(f.coeffs.size() >= 10);
            CHECK(f.coeffs[0] == 1.0);
            CHECK(f.c_norm > 0.0);
            // Hecke multiplicativity
            CHECK(f.coeffs[1] * f.coeffs[2] == doctest::Approx(f.coeffs[5]).epsilon(1e-10));
            CHECK(f.coeffs[1] * f.coeffs[1] - 1.0 == doctest::Approx(f.coeffs[3]).epsilon(1e-10));
        }
        CHECK(maass_laplacian_residual(forms[0], laplacian_check_point()) <= kLaplacianTolerance);
        for (const auto& f : forms) {
            CHECK(maass_modularity_defect(f) <= 1e-12);
        }
    }

    TEST_CASE("single even form") {
        const auto forms = load_maass_data_from_string(single_form(2), "even");
        REQUIRE(forms.size() == 1);
        CHECK(forms[0].r == doctest::Approx(13.77975).epsilon(1e-6));
    }

    TEST_CASE("empty input gives an empty list") {
        CHECK(parse_maass_data("", "empty").empty());
        CHECK(parse_maass_data("  \n\n", "blank").empty());
    }

    TEST_CASE("grammar errors carry line numbers") {
        const std::string good = single_form(0);
        auto line_of = [](const std::string& text) {
            try {
                parse_maass_data(text, "bad");
            } catch (const ParseError& e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("form r=1 parity=odd n=1\n1\n") == 1);
        CHECK(line_of(replace_first(good, "v1", "v2")) == 1);
        CHECK(line_of(replace_first(good, "parity=odd", "parity=weird")) == 2);
        CHECK(line_of(replace_first(good, "n=16", "n=sixteen")) == 2);
        CHECK(line_of(replace_first(good, "n=16", "n=20")) > 2);
        CHECK(line_of(replace_first(good, "n=16", "n=12")) == 5);
        CHECK(line_of(good + "# trailing comment\n") == 6);
        CHECK_THROWS_WITH_AS(parse_maass_data(replace_first(good, "v1", "v9"), "x"), doctest::Contains("unsupported"),
                             ParseError);
    }

    TEST_CASE("validation failures name the check") {
        auto check_of = [](const std::string& text) {
            try {
                load_maass_data_from_string(text, "bad");
            } catch (const ValidationError& e) {
                return e.check();
            }
            return std::string();
        };
        const std::string good = single_form(0);
        CHECK(check_of(replace_first(good, "\n1.0000000000000000 ", "\n1.5 ")) == "normalization");
        // keep the first nine coefficients only
        std::istringstream in(good);
        std::string header, form, coeffs, tok;
        std::getline(in, header);
        std::getline(in, form);
        std::string first9;
        for (int k = 0; k < 9 && in >> tok; ++k) {
            first9 += tok + " ";
        }
        CHECK(check_of(header + "\n" + replace_first(form, "n=16", "n=9") + "\n" + first9 + "\n") == "length");
        CHECK(check_of(replace_first(good, "r=9.533695261353558", "r=9.54")) == "modularity");
    }

    TEST_CASE("missing file") {
        CHECK_THROWS(load_maass_data("/nonexistent/maass.txt"));
    }
}
