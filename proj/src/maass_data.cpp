#include "autoheat/maass_data.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "autoheat/fundamental_domain.hpp"

namespace autoheat {

namespace {

double parse_double(const std::string& token, int line, const std::string& what) {
    double v = 0.0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ParseError(line, "malformed " + what + " '" + token + "'");
    }
    return v;
}

std::string value_after(const std::string& token, const std::string& key, int line) {
    if (token.rfind(key, 0) != 0) {
        throw ParseError(line, "expected '" + key + "...', got '" + token + "'");
    }
    return token.substr(key.size());
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<MaassFormData> parse_maass_data(const std::string& text, const std::string& source) {
    std::vector<MaassFormData> forms;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        return forms;
    }
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::getline(in, line);
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kMaassHeader) {
        if (line.rfind("#maass-sl2z ", 0) == 0) {
            throw ParseError(lineno, "unsupported format version '" + line.substr(12) + "'");
        }
        throw ParseError(lineno, "missing header '" + std::string(kMaassHeader) + "'");
    }

    std::size_t pending = 0;  // coefficients still owed to forms.back()
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }
        if (pending == 0) {
            if (tokens.size() != 4 || tokens[0] != "form") {
                throw ParseError(lineno, "expected 'form r=<decimal> parity=<even|odd> n=<N>'");
            }
            MaassFormData f;
            f.r = parse_double(value_after(tokens[1], "r=", lineno), lineno, "r");
            const std::string parity = value_after(tokens[2], "parity=", lineno);
            if (parity == "even") {
                f.parity = Parity::Even;
            } else if (parity == "odd") {
                f.parity = Parity::Odd;
            } else {
                throw ParseError(lineno, "parity must be 'even' or 'odd', got '" + parity + "'");
            }
            const std::string n = value_after(tokens[3], "n=", lineno);
            int count = 0;
            auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), count);
            if (ec != std::errc() || ptr != n.data() + n.size() || count < 1) {
                throw ParseError(lineno, "malformed coefficient count '" + n + "'");
            }
            if (!(f.r > 0.0)) {
                throw ParseError(lineno, "r must be positive");
            }
            f.source = source + ":" + std::to_string(lineno);
            f.coeffs.reserve(count);
            pending = static_cast<std::size_t>(count);
            forms.push_back(std::move(f));
            continue;
        }
        if (tokens[0] == "form") {
            throw ParseError(lineno, "form record started with " + std::to_string(pending) +
                                         " coefficients missing from the previous one");
        }
        if (tokens.size() > pending) {
            throw ParseError(lineno, "more coefficients than declared by n=");
        }
        for (const auto& t : tokens) {
            forms.back().coeffs.push_back(parse_double(t, lineno, "coefficient"));
        }
        pending -= tokens.size();
    }
    if (pending != 0) {
        throw ParseError(lineno, "end of file with " + std::to_string(pending) + " coefficients missing");
    }
    return forms;
}

double hecke_form_norm(const MaassFormData& f) {
    static const DomainQuadrature q = fundamental_domain_quadrature();
    MaassFormData unit = f;
    unit.c_norm = 1.0;
    double total = 0.0;
    for (const auto& row : q.rows) {
        const FourierRow fr = maass_row(unit, row.y);
        for (std::size_t k = 0; k < row.x.size(); ++k) {
            const double v = fr.eval(row.x[k]);
            total += row.w[k] * v * v;
        }
    }
    return std::sqrt(total);
}

double maass_modularity_defect(const MaassFormData& f) {
    // just outside the unit circle, so both z and -1/z sit near the arc
    double defect = 0.0;
    double scale = 0.0;
    for (double x : {0.13, 0.29, 0.41}) {
        const HPoint z(x, std::sqrt(1.1025 - x * x));
        const double v = eval_maass(f, z);
        defect = std::max(defect, std::abs(eval_maass(f, z.invert()) - v));
        scale = std::max(scale, std::abs(v));
    }
    return defect / scale;
}

std::vector<MaassFormData> load_maass_data_from_string(const std::string& text, const std::string& source) {
    std::vector<MaassFormData> forms = parse_maass_data(text, source);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto& f = forms[i];
        const std::string id = "form " + std::to_string(i + 1) + " (" + f.source + ")";
        if (std::abs(f.coeffs.front() - 1.0) > 1e-9) {
            throw ValidationError("normalization", id + " has a_1 = " + std::to_string(f.coeffs.front()) +
                                                       ", expected Hecke normalization a_1 = 1");
        }
        if (f.coeffs.size() < 10) {
            throw ValidationError("length", id + " has " + std::to_string(f.coeffs.size()) +
                                                " coefficients, need at least 10");
        }
        if (!maass_decay_ok(f, std::sqrt(3.0) / 2.0)) {
            throw ValidationError("decay", id + " is too short to evaluate on the fundamental domain");
        }
        const double defect = maass_modularity_defect(f);
        if (!(defect <= kModularityTolerance)) {
            throw ValidationError("modularity", id + " at r = " + std::to_string(f.r) + " changes by " +
                                                    std::to_string(defect) + " (relative) under z -> -1/z");
        }
        f.c_norm = 1.0 / hecke_form_norm(f);
    }
    if (!forms.empty()) {
        const double res = maass_laplacian_residual(forms.front(), laplacian_check_point());
        if (!(res <= kLaplacianTolerance)) {
            throw ValidationError("laplacian", "first form r = " + std::to_string(forms.front().r) +
                                                   " has relative Laplacian residual " + std::to_string(res));
        }
    }
    return forms;
}

std::vector<MaassFormData> load_maass_data(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open Maass data file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_maass_data_from_string(buf.str(), path.filename().string());
}

}  // namespace autoheat
