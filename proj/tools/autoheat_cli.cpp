// autoheat: evaluate the heat kernel on SL2(Z)\H and run the verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "autoheat/config.hpp"
#include "autoheat/maass_data.hpp"
#include "autoheat/synthesis.hpp"
#include "autoheat/verification.hpp"

using namespace autoheat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWarning = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

// Field list shared by the CSV and JSON writers; values are preformatted.
using Record = std::vector<std::pair<std::string, std::string>>;

void emit(const std::vector<Record>& rows, const std::vector<std::string>& header, OutputFormat fmt,
          const std::vector<bool>& quoted = {}) {
    std::ostringstream out;
    if (fmt == OutputFormat::Csv) {
        for (std::size_t k = 0; k < header.size(); ++k) {
            out << (k ? "," : "") << header[k];
        }
        out << '\n';
        for (const Record& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k) {
                out << (k ? "," : "") << r[k].second;
            }
            out << '\n';
        }
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << "  {";
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                const bool q = k < quoted.size() && quoted[k];
                out << (k ? ", " : "") << '"' << rows[i][k].first << "\": " << (q ? "\"" : "") << rows[i][k].second
                    << (q ? "\"" : "");
            }
            out << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        out << "]\n";
    }
    std::cout << out.str() << std::flush;
}

struct Common {
    std::string config_path;
    double r_max = 0.0;
    double norm_bound = 0.0;
    std::string format;
    CLI::Option* r_max_opt = nullptr;
    CLI::Option* norm_bound_opt = nullptr;
    CLI::Option* format_opt = nullptr;
};

RunConfig resolve_config(const Common& c) {
    RunConfig cfg = default_config();
    if (!c.config_path.empty()) {
        apply_config_file(cfg, c.config_path);
    }
    if (c.r_max_opt->count() > 0) {
        cfg.r_max = c.r_max;
    }
    if (c.norm_bound_opt->count() > 0) {
        cfg.oracle_norm_bound = c.norm_bound;
    }
    if (c.format_opt->count() > 0) {
        cfg.output_format = parse_output_format(c.format);
    }
    cfg.validate();
    return cfg;
}

GridPtr make_grid(const RunConfig& cfg, std::vector<MaassFormData>* forms_out = nullptr) {
    auto forms = load_maass_data(cfg.maass_data_path);
    GridOptions opts;
    opts.r_max = cfg.r_max;
    opts.panels = cfg.panels;
    opts.nodes_per_panel = cfg.nodes_per_panel;
    GridPtr grid = build_grid(forms, opts);
    if (forms_out != nullptr) {
        *forms_out = std::move(forms);
    }
    return grid;
}

int cmd_eval(const RunConfig& cfg, double t, double x, double y) {
    if (!(y > 0.0)) {
        throw UsageError("--y must be positive");
    }
    const GridPtr grid = make_grid(cfg);
    SynthesisOptions opts;
    opts.tail_tolerance = cfg.tolerance("tail");
    const SynthesisReport r = evaluate_heat_kernel(t, HPoint(x, y), grid, opts);
    emit({{{"t", num(t)},
           {"x", num(x)},
           {"y", num(y)},
           {"value", num(r.value.real())},
           {"cusp_part", num(r.cusp_part.real())},
           {"residual_part", num(r.residual_part.real())},
           {"eisenstein_part", num(r.eisenstein_part.real())},
           {"tail_estimate", num(r.tail_estimate)}}},
         {"t", "x", "y", "value", "cusp_part", "residual_part", "eisenstein_part", "tail_estimate"},
         cfg.output_format);
    if (r.tail_warning) {
        std::cerr << "warning: spectral tail estimate " << num(r.tail_estimate) << " exceeds tolerance\n";
        return kExitWarning;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    if (!is_suite(suite)) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    VerifyContext ctx;
    ctx.grid = make_grid(cfg, &ctx.forms);
    ctx.oracle_norm_bound = cfg.oracle_norm_bound;
    ctx.oracle_agreement = cfg.tolerance("oracle_agreement");
    ctx.oracle_shell = cfg.tolerance("oracle_shell");
    const auto checks = run_suite(suite, ctx);
    std::vector<Record> rows;
    bool ok = true;
    for (const CheckRow& c : checks) {
        rows.push_back({{"name", c.name},
                        {"measured", num(c.measured)},
                        {"lower", num(c.lower)},
                        {"upper", num(c.upper)},
                        {"status", c.pass ? "pass" : "fail"}});
        ok = ok && c.pass;
    }
    if (cfg.output_format == OutputFormat::Json) {
        // infinities are not JSON numbers
        for (Record& r : rows) {
            for (auto& [k, v] : r) {
                if (v == "inf" || v == "-inf") {
                    v = "null";
                }
            }
        }
    }
    emit(rows, {"name", "measured", "lower", "upper", "status"}, cfg.output_format,
         {true, false, false, false, true});
    return ok ? kExitOk : kExitError;
}

int cmd_profile(const RunConfig& cfg, const std::vector<double>& ts) {
    if (ts.empty()) {
        throw UsageError("--t-list must not be empty");
    }
    const bool up = ts.size() > 1 && ts[1] > ts[0];
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (!(ts[k] > 0.0)) {
            throw UsageError("--t-list entries must be positive");
        }
        if (k > 0 && (up ? !(ts[k] > ts[k - 1]) : !(ts[k] < ts[k - 1]))) {
            throw UsageError("--t-list must be strictly monotone");
        }
    }
    const GridPtr grid = make_grid(cfg);
    const std::vector<int> s_list = {0, 4, 8};
    std::vector<std::string> header = {"t", "gap"};
    for (int s : s_list) {
        header.push_back("s" + std::to_string(s));
    }
    std::vector<Record> rows;
    for (double t : ts) {
        const CoeffFn u = heat_coefficients(t, grid).coeffs;
        Record r = {{"t", num(t)}, {"gap", num(initial_condition_gap(grid, t))}};
        for (int s : s_list) {
            r.emplace_back("s" + std::to_string(s), num(norm_vs(u, SobolevIndex(s))));
        }
        rows.push_back(std::move(r));
    }
    emit(rows, header, cfg.output_format);
    return kExitOk;
}

int cmd_ingest_check(const RunConfig& cfg) {
    const auto forms = load_maass_data(cfg.maass_data_path);
    std::vector<Record> rows;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const MaassFormData& f = forms[k];
        rows.push_back({{"r", num(f.r)},
                        {"parity", f.parity == Parity::Even ? "even" : "odd"},
                        {"n", std::to_string(f.coeffs.size())},
                        {"c_norm", num(f.c_norm)},
                        {"laplacian_residual", num(maass_laplacian_residual(f, laplacian_check_point()))}});
    }
    emit(rows, {"r", "parity", "n", "c_norm", "laplacian_residual"}, cfg.output_format,
         {false, true, false, false, false});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat kernel on the modular surface by spectral synthesis"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--config", common.config_path, "key = value configuration file")->check(CLI::ExistingFile);
    common.r_max_opt = app.add_option("--r-max", common.r_max, "spectral cutoff");
    common.norm_bound_opt = app.add_option("--norm-bound", common.norm_bound, "oracle entry bound");
    common.format_opt = app.add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    double t = 0.0;
    double x = 0.0;
    double y = 1.0;
    auto* eval = app.add_subcommand("eval", "heat kernel based at i, evaluated at x + iy");
    eval->add_option("--t", t, "time")->required();
    eval->add_option("--x", x, "real part");
    eval->add_option("--y", y, "imaginary part");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite,--suite", suite, "sobolev, semigroup, heat, oracle or all")->required();

    std::vector<double> t_list;
    auto* profile = app.add_subcommand("profile", "initial-condition gap and Sobolev norms over times");
    profile->add_option("--t-list", t_list, "comma-separated times")->delimiter(',')->required();

    auto* ingest = app.add_subcommand("ingest-check", "load and validate the cusp form data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const RunConfig cfg = resolve_config(common);
        if (*eval) {
            return cmd_eval(cfg, t, x, y);
        }
        if (*verify) {
            return cmd_verify(cfg, suite);
        }
        if (*profile) {
            return cmd_profile(cfg, t_list);
        }
        if (*ingest) {
            return cmd_ingest_check(cfg);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}
