#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoheat/execution.hpp"
#include "autoheat/spectral_model.hpp"

namespace autoheat {

struct CheckRow {
    std::string name;
    double measured = 0.0;
    double lower = 0.0;  // -inf when only an upper bound applies
    double upper = 0.0;
    bool pass = false;

    [[nodiscard]] std::string bound_text() const;
};

CheckRow check_at_most(std::string name, double measured, double bound);
CheckRow check_within(std::string name, double measured, double lower, double upper);

struct VerifyContext {
    GridPtr grid;
    std::vector<MaassFormData> forms;
    double oracle_norm_bound = 25.0;
    double oracle_agreement = 1e-3;
    double oracle_shell = 1e-4;
    Exec exec = Exec::Parallel;
    std::uint64_t seed = 0x5eed;
};

// One function per acceptance criterion.
std::vector<CheckRow> check_mu_isometry(const VerifyContext& ctx);
std::vector<CheckRow> check_operator_suite(const VerifyContext& ctx);
std::vector<CheckRow> check_semigroup_suite(const VerifyContext& ctx);
std::vector<CheckRow> check_heat_equation(const VerifyContext& ctx);
std::vector<CheckRow> check_initial_condition(const VerifyContext& ctx);
std::vector<CheckRow> check_uniqueness(const VerifyContext& ctx);
std::vector<CheckRow> check_oracle_agreement(const VerifyContext& ctx);
std::vector<CheckRow> check_long_time(const VerifyContext& ctx);
std::vector<CheckRow> check_smoothness(const VerifyContext& ctx);
std::vector<CheckRow> check_parseval(const VerifyContext& ctx);
std::vector<CheckRow> check_special_functions(const VerifyContext& ctx);

// Supporting checks.
std::vector<CheckRow> check_mass(const VerifyContext& ctx);
std::vector<CheckRow> check_translation(const VerifyContext& ctx);
std::vector<CheckRow> check_laplace_resolvent(const VerifyContext& ctx);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckRow> run_suite(const std::string& name, const VerifyContext& ctx);

}  // namespace autoheat
