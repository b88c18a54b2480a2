#include "autoheat/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef AUTOHEAT_DEFAULT_DATA
#define AUTOHEAT_DEFAULT_DATA "data/maass_sl2z.txt"
#endif

namespace autoheat {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    }
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
    }
    return out;
}

}  // namespace

double RunConfig::tolerance(const std::string& name) const {
    const auto it = tolerances.find(name);
    if (it == tolerances.end()) {
        throw ConfigError("config: unknown tolerance '" + name + "'");
    }
    return it->second;
}

void RunConfig::validate() const {
    if (!(r_max > 0.0) || !std::isfinite(r_max)) {
        throw ConfigError("config: r_max must be positive");
    }
    if (panels < 1 || nodes_per_panel < 1) {
        throw ConfigError("config: panels and nodes_per_panel must be at least 1");
    }
    if (!(oracle_norm_bound >= std::sqrt(2.0))) {
        throw ConfigError("config: oracle_norm_bound must be at least sqrt(2)");
    }
    for (const auto& [name, v] : tolerances) {
        if (!(v > 0.0)) {
            throw ConfigError("config: tolerance '" + name + "' must be positive");
        }
    }
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("config: output format must be 'csv' or 'json', got '" + s + "'");
}

RunConfig default_config() {
    RunConfig c;
    const char* env = std::getenv("AUTOHEAT_DATA");
    c.maass_data_path = env != nullptr && *env != '\0' ? env : AUTOHEAT_DEFAULT_DATA;
    return c;
}

void apply_config_text(RunConfig& config, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line.substr(0, line.find('#')));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (key == "maass_data_path") {
            config.maass_data_path = value;
        } else if (key == "r_max") {
            config.r_max = to_double(key, value);
        } else if (key == "panels") {
            config.panels = to_int(key, value);
        } else if (key == "nodes_per_panel") {
            config.nodes_per_panel = to_int(key, value);
        } else if (key == "oracle_norm_bound") {
            config.oracle_norm_bound = to_double(key, value);
        } else if (key == "output_format") {
            config.output_format = parse_output_format(value);
        } else if (key.rfind("tolerance.", 0) == 0) {
            config.tolerances[key.substr(10)] = to_double(key, value);
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(config, buf.str());
}

}  // namespace autoheat
