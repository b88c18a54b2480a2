// Acceptance criteria, one per invocation: autoheat_acceptance <criterion>.
// Prints a single PASS/FAIL line; the exit status follows it.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "autoheat/maass_data.hpp"
#include "autoheat/verification.hpp"

using namespace autoheat;

namespace {

struct Criterion {
    const char* key;
    std::vector<CheckRow> (*run)(const VerifyContext&);
    double budget_seconds;
};

const Criterion kCriteria[] = {
    {"mu_isometry", check_mu_isometry, 1.0},
    {"operator_suite", check_operator_suite, 1.0},
    {"semigroup_suite", check_semigroup_suite, 1.0},
    {"heat_equation", check_heat_equation, 1.0},
    {"initial_condition", check_initial_condition, 1.0},
    {"uniqueness", check_uniqueness, 5.0},
    {"oracle_agreement", check_oracle_agreement, 120.0},
    {"long_time", check_long_time, 30.0},
    {"smoothness", check_smoothness, 30.0},
    {"parseval", check_parseval, 300.0},
    {"special_functions", check_special_functions, 10.0},
};

int run(const Criterion& c, const VerifyContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = c.run(ctx);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = secs < c.budget_seconds;
    const CheckRow* worst = nullptr;
    for (const CheckRow& r : rows) {
        if (!r.pass && worst == nullptr) {
            worst = &r;
        }
        pass = pass && r.pass;
    }
    if (worst == nullptr) {
        worst = &rows.back();
    }
    std::printf("%s %s: %zu checks, %s measured %.3e bound %s, %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.key,
                rows.size(), worst->name.c_str(), worst->measured, worst->bound_text().c_str(), secs, c.budget_seconds);
    if (!pass) {
        for (const CheckRow& r : rows) {
            if (!r.pass) {
                std::fprintf(stderr, "  failed %s: %.6e not %s\n", r.name.c_str(), r.measured, r.bound_text().c_str());
            }
        }
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    VerifyContext ctx;
    try {
        ctx.forms = load_maass_data(AUTOHEAT_TEST_DATA);
        ctx.grid = build_grid(ctx.forms, GridOptions{});
    } catch (const std::exception& e) {
        std::printf("FAIL setup: %s\n", e.what());
        return 1;
    }
    int status = 0;
    bool matched = false;
    for (const Criterion& c : kCriteria) {
        if (argc < 2 || std::strcmp(argv[1], c.key) == 0) {
            matched = true;
            status |= run(c, ctx);
        }
    }
    if (!matched) {
        std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
        return 64;
    }
    return status;
}
