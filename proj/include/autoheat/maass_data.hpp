#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "autoheat/automorphic_forms.hpp"

namespace autoheat {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string check, const std::string& what)
        : std::runtime_error(check + ": " + what), check_(std::move(check)) {}
    [[nodiscard]] const std::string& check() const { return check_; }

private:
    std::string check_;
};

inline constexpr const char* kMaassHeader = "#maass-sl2z v1";
inline constexpr double kLaplacianTolerance = 1e-4;
inline constexpr double kModularityTolerance = 1e-6;

/// Parses the `#maass-sl2z v1` text format. No validation beyond grammar.
std::vector<MaassFormData> parse_maass_data(const std::string& text, const std::string& source);

/// Parse, validate (a_1 = 1, N >= 10, invariance under z -> -1/z, Laplacian
/// residual of the first form) and set c_norm from quadrature of |f|^2 over
/// the fundamental domain. Each expansion term is an eigenfunction for the
/// stated r, so a wrong r shows up in the modularity check rather than the
/// Laplacian one.
std::vector<MaassFormData> load_maass_data(const std::filesystem::path& path);
std::vector<MaassFormData> load_maass_data_from_string(const std::string& text, const std::string& source);

/// max |f(-1/z) - f(z)| / max |f(z)| over three points with |z| = 1.05.
double maass_modularity_defect(const MaassFormData& f);

/// L2 norm over the fundamental domain of the expansion with c_norm = 1.
double hecke_form_norm(const MaassFormData& f);

/// Point used for the Laplacian spot check; off the line x = 0 where odd forms vanish.
inline HPoint laplacian_check_point() { return HPoint(0.3, 1.3); }

}  // namespace autoheat
