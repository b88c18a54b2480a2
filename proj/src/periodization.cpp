#include "autoheat/periodization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "autoheat/quadrature.hpp"

namespace autoheat {

namespace {

constexpr int kPanelNodes = 16;
constexpr int kPanelLevels = 28;

// log I(rho) with I the bounded u-integral; see the header.
double log_u_integral(double t, double rho) {
    // exponent (2 rho u^2 + u^4) / 4t + u^2 / 4 reaches 46 at u = umax
    const double b = 2.0 * rho + t;
    const double u2 = 0.5 * (-b + std::sqrt(b * b + 4.0 * 184.0 * t));
    const double umax = std::sqrt(u2);
    static const QuadratureRule g = gauss_legendre(kPanelNodes);
    double total = 0.0;
    double hi = umax;
    for (int level = 0; level <= kPanelLevels; ++level) {
        const double lo = level == kPanelLevels ? 0.0 : 0.5 * hi;
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double s = 0.0;
        for (int i = 0; i < kPanelNodes; ++i) {
            const double u = mid + half * g.nodes[i];
            const double uu = u * u;
            const double a = rho + 0.5 * uu;
            const double e = (2.0 * rho * uu + uu * uu) / (4.0 * t) + 0.25 * uu;
            const double v = 2.0 * u * (rho + uu) * std::exp(-e) / std::sqrt(-std::expm1(-2.0 * a) * std::sinh(0.5 * uu));
            s += g.weights[i] * v;
        }
        total += half * s;
        hi = lo;
    }
    return std::log(total);
}

void check_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("hyperbolic heat kernel: t must be positive");
    }
}

}  // namespace

double log_hyperbolic_heat_kernel(double t, double rho) {
    check_time(t);
    if (!(rho >= 0.0)) {
        throw std::invalid_argument("hyperbolic heat kernel: distance must be nonnegative");
    }
    const double c0 = 0.5 * std::log(2.0) - 0.25 * t - 1.5 * std::log(4.0 * std::numbers::pi * t);
    return c0 - rho * rho / (4.0 * t) - 0.5 * rho + log_u_integral(t, rho);
}

double hyperbolic_heat_kernel(double t, double rho) {
    return std::exp(log_hyperbolic_heat_kernel(t, rho));
}

HeatKernelTable::HeatKernelTable(double t, double spacing) : t_(t), h_(spacing) {
    check_time(t);
    const double floor = log_hyperbolic_heat_kernel(t, 0.0) - 80.0;
    // -rho^2/4t - rho/2 bounds the decay from above
    double rho_guess = 2.0 * t * (-0.5 + std::sqrt(0.25 + 80.0 / t)) + 2.0;
    while (log_hyperbolic_heat_kernel(t, rho_guess) > floor) {
        rho_guess *= 1.25;
    }
    rho_max_ = rho_guess;
    const std::size_t n = static_cast<std::size_t>(std::ceil(rho_max_ / h_)) + 3;
    log_p_.resize(n);
    // one entry below zero by evenness of p_t in rho
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
        log_p_[i] = log_hyperbolic_heat_kernel(t, std::abs((static_cast<double>(i) - 1.0) * h_));
    }
}

double HeatKernelTable::log_value(double rho) const {
    const double pos = rho / h_ + 1.0;
    std::size_t i = static_cast<std::size_t>(pos);
    i = std::clamp<std::size_t>(i, 1, log_p_.size() - 3);
    const double f = pos - static_cast<double>(i);
    const double y0 = log_p_[i - 1];
    const double y1 = log_p_[i];
    const double y2 = log_p_[i + 1];
    const double y3 = log_p_[i + 2];
    // cubic Lagrange through nodes -1, 0, 1, 2
    return y0 * (-f * (f - 1.0) * (f - 2.0) / 6.0) + y1 * ((f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0) +
           y2 * (-(f + 1.0) * f * (f - 2.0) / 2.0) + y3 * ((f + 1.0) * f * (f - 1.0) / 6.0);
}

double HeatKernelTable::operator()(double rho) const {
    if (rho > rho_max_) {
        return 0.0;
    }
    return std::exp(log_value(rho));
}

namespace {

struct Partial {
    double sum = 0.0;
    double shell = 0.0;
    std::int64_t terms = 0;
};

// sinh(rho / 2) = |z - w| / (2 sqrt(Im z Im w)) avoids acosh near zero
double distance_to(const HPoint& z, double X, double Y) {
    const double dx = z.x() - X;
    const double dy = z.y() - Y;
    return 2.0 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(z.y() * Y)));
}

// x d + y c = g
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1 = 0;
    long long y1 = 0;
    const long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

// Matrices with bottom row (c, d), c > 0 or (c, d) = (0, 1).
Partial bottom_row_sum(long long c, long long d, double bound, Enumeration mode, const HPoint& z,
                       const HeatKernelTable& p) {
    Partial out;
    long long a0 = 1;
    long long b0 = 0;
    if (c != 0) {
        long long x = 0;
        long long y = 0;
        const long long g = ext_gcd(d, c, x, y);
        if (g != 1 && g != -1) {
            return out;
        }
        // x d + y c = g = +-1, so a0 d - b0 c = 1
        a0 = x * g;
        b0 = -y * g;
    }
    long long k_lo = 0;
    long long k_hi = -1;
    const long long B = static_cast<long long>(std::floor(bound));
    if (mode == Enumeration::Box) {
        k_lo = -4 * B - 4;
        k_hi = 4 * B + 4;
        auto clip = [&](long long base, long long step) {
            if (step == 0) {
                if (std::llabs(base) > B) {
                    k_hi = k_lo - 1;
                }
                return;
            }
            long long lo = ceil_div(-B - base, step);
            long long hi = floor_div(B - base, step);
            if (step < 0) {
                lo = ceil_div(B - base, step);
                hi = floor_div(-B - base, step);
            }
            k_lo = std::max(k_lo, lo);
            k_hi = std::min(k_hi, hi);
        };
        if (c == 0) {
            k_lo = -B;
            k_hi = B;
        } else {
            clip(a0, c);
            clip(b0, d);
        }
    } else {
        const double A = static_cast<double>(c * c + d * d);
        const double Bq = static_cast<double>(a0 * c + b0 * d);
        const double Cq = static_cast<double>(a0 * a0 + b0 * b0) - bound * bound + A;
        const double disc = Bq * Bq - A * Cq;
        if (disc < 0.0) {
            return out;
        }
        const double sq = std::sqrt(disc);
        k_lo = static_cast<long long>(std::floor((-Bq - sq) / A)) - 1;
        k_hi = static_cast<long long>(std::ceil((-Bq + sq) / A)) + 1;
    }
    const double inv = 1.0 / static_cast<double>(c * c + d * d);
    const double b2 = bound * bound;
    const double inner = bound - 1.0;
    for (long long k = k_lo; k <= k_hi; ++k) {
        const long long a = a0 + k * c;
        const long long b = b0 + k * d;
        bool shell = false;
        if (mode == Enumeration::Box) {
            const long long m = std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)});
            if (m > B) {
                continue;
            }
            shell = static_cast<double>(m) > inner;
        } else {
            const double n2 = static_cast<double>(a * a + b * b + c * c + d * d);
            if (n2 > b2) {
                continue;
            }
            shell = n2 > inner * inner;
        }
        const double X = static_cast<double>(a * c + b * d) * inv;
        const double v = p(distance_to(z, X, inv));
        out.sum += v;
        if (shell) {
            out.shell += v;
        }
        ++out.terms;
    }
    return out;
}

OracleResult finish(const std::vector<Partial>& parts, double tolerance) {
    std::vector<double> sums(parts.size());
    std::vector<double> shells(parts.size());
    OracleResult r;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        sums[i] = parts[i].sum;
        shells[i] = parts[i].shell;
        r.terms += parts[i].terms;
    }
    r.value = pairwise_sum(sums);
    r.shell_contribution = pairwise_sum(shells);
    r.shell_warning = r.shell_contribution > tolerance * r.value;
    return r;
}

OracleResult arithmetic_at_i(double bound, const HeatKernelTable& p, const OracleOptions& options) {
    const double b2 = bound * bound;
    const double inner2 = (bound - 1.0) * (bound - 1.0);
    if (b2 < 2.0) {
        return {};
    }
    const std::uint64_t m_max = static_cast<std::uint64_t>(std::floor(b2 - 2.0));
    constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
    const std::uint64_t blocks = m_max / kBlock + 1;
    std::vector<Partial> parts(blocks);
    auto one = [&](std::uint64_t blk) {
        const std::uint64_t lo = blk * kBlock;
        const std::uint64_t n = std::min(kBlock, m_max + 1 - lo);
        const std::vector<std::uint32_t> r2 = sum_of_two_squares_counts(lo, n + 4);
        Partial part;
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint64_t m = lo + i;
            const std::uint64_t count = psl2_norm_count(m, r2[i], r2[i + 4]);
            if (count == 0) {
                continue;
            }
            const double norm2 = static_cast<double>(m + 2);
            const double v = static_cast<double>(count) * p(std::acosh(0.5 * norm2));
            part.sum += v;
            if (norm2 > inner2) {
                part.shell += v;
            }
            part.terms += static_cast<std::int64_t>(count);
        }
        parts[blk] = part;
    };
    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            one(blk);
        }
    } else {
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            one(blk);
        }
    }
    return finish(parts, options.shell_tolerance);
}

void check_oracle_args(double t, double bound) {
    if (!(t >= 0.2 && t <= 10.0)) {
        throw std::invalid_argument("periodized_oracle: t must lie in [0.2, 10], got " + std::to_string(t));
    }
    if (!(bound >= std::sqrt(2.0))) {
        throw std::invalid_argument("periodized_oracle: norm bound must be at least sqrt(2)");
    }
}

}  // namespace

std::vector<std::uint32_t> sum_of_two_squares_counts(std::uint64_t lo, std::uint64_t count) {
    std::vector<std::uint32_t> q(count, 0);  // p >= 1, q >= 0
    const std::uint64_t hi = lo + count;
    for (std::uint64_t p = 1; p * p < hi; ++p) {
        const std::uint64_t p2 = p * p;
        std::uint64_t qq = 0;
        if (p2 < lo) {
            qq = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(lo - p2)));
            while (qq > 0 && p2 + qq * qq >= lo) {
                --qq;
            }
            while (p2 + qq * qq < lo) {
                ++qq;
            }
        }
        for (; p2 + qq * qq < hi; ++qq) {
            ++q[p2 + qq * qq - lo];
        }
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        q[i] = lo + i == 0 ? 1 : 4 * q[i];
    }
    return q;
}

std::uint64_t psl2_norm_count(std::uint64_t m, std::uint32_t r2_m, std::uint32_t r2_m4) {
    // a - d, b + c represent m and a + d, b - c represent m + 4 with matching parities
    const std::uint64_t pairs = static_cast<std::uint64_t>(r2_m) * r2_m4;
    switch (m % 4) {
        case 0:
        case 2:
            return pairs / 2;
        case 1:
            return pairs / 4;
        default:
            return 0;
    }
}

OracleResult periodized_oracle(double t, const HPoint& z, double bound, const OracleOptions& options) {
    check_oracle_args(t, bound);
    const HeatKernelTable p(t);
    if (options.mode == Enumeration::FrobeniusBall && options.arithmetic_at_i && z.x() == 0.0 && z.y() == 1.0) {
        return arithmetic_at_i(bound, p, options);
    }
    const long long B = static_cast<long long>(std::floor(bound));
    // rows c = 0..B; row c holds every d in [-B, B] (only d = 1 when c = 0)
    std::vector<Partial> parts(B + 1);
    auto row = [&](long long c) {
        Partial acc;
        if (c == 0) {
            acc = bottom_row_sum(0, 1, bound, options.mode, z, p);
        } else {
            for (long long d = -B; d <= B; ++d) {
                const Partial q = bottom_row_sum(c, d, bound, options.mode, z, p);
                acc.sum += q.sum;
                acc.shell += q.shell;
                acc.terms += q.terms;
            }
        }
        parts[c] = acc;
    };
    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long c = 0; c <= B; ++c) {
            row(c);
        }
    } else {
        for (long long c = 0; c <= B; ++c) {
            row(c);
        }
    }
    return finish(parts, options.shell_tolerance);
}

OracleResult periodized_oracle_bruteforce(double t, const HPoint& z, double bound, Enumeration mode) {
    check_oracle_args(t, bound);
    const long long N = static_cast<long long>(std::floor(bound));
    const double inner = bound - 1.0;
    OracleResult r;
    for (long long a = -N; a <= N; ++a) {
        for (long long b = -N; b <= N; ++b) {
            for (long long c = -N; c <= N; ++c) {
                for (long long d = -N; d <= N; ++d) {
                    if (a * d - b * c != 1) {
                        continue;
                    }
                    const long long first = a != 0 ? a : (b != 0 ? b : c);
                    if (first < 0) {
                        continue;
                    }
                    bool shell = false;
                    if (mode == Enumeration::FrobeniusBall) {
                        const double n2 = static_cast<double>(a * a + b * b + c * c + d * d);
                        if (n2 > bound * bound) {
                            continue;
                        }
                        shell = n2 > inner * inner;
                    } else {
                        const long long m = std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)});
                        shell = static_cast<double>(m) > inner;
                    }
                    const HPoint w = SL2Z{a, b, c, d}.act(HPoint(0.0, 1.0));
                    const double v = hyperbolic_heat_kernel(t, std::acosh(cosh_distance(z, w)));
                    r.value += v;
                    if (shell) {
                        r.shell_contribution += v;
                    }
                    ++r.terms;
                }
            }
        }
    }
    return r;
}

}  // namespace autoheat
