#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace autoheat {

enum class OutputFormat { Csv, Json };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::filesystem::path maass_data_path;
    double r_max = 12.0;
    int panels = 4;
    int nodes_per_panel = 32;
    double oracle_norm_bound = 25.0;
    std::map<std::string, double> tolerances = {
        {"tail", 1e-10},
        {"oracle_shell", 1e-4},
        {"oracle_agreement", 1e-3},
    };
    OutputFormat output_format = OutputFormat::Csv;

    [[nodiscard]] double tolerance(const std::string& name) const;
    /// Throws ConfigError unless r_max > 0, panels >= 1 and all tolerances > 0.
    void validate() const;
};

/// Defaults, with maass_data_path from AUTOHEAT_DATA when set and the
/// bundled data file otherwise.
RunConfig default_config();

/// Applies `key = value` lines (# comments, blank lines allowed). Keys:
/// maass_data_path, r_max, panels, nodes_per_panel, oracle_norm_bound,
/// output_format, tolerance.<name>.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

OutputFormat parse_output_format(const std::string& s);

}  // namespace autoheat
