#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "autoheat/automorphic_forms.hpp"

namespace autoheat {

/// The Sobolev exponent l: smallest integer above half the surface dimension.
inline constexpr int kEll = 2;

struct SpectralPoint {
    SpectralKind kind = SpectralKind::Residual;
    double r = 0.0;
    double eigenvalue = 0.0;
    cplx basepoint_value = 0.0;
    std::optional<std::size_t> form_index;  // into SpectralGrid::forms() for Cuspidal
};

/// Integer Sobolev index.
class SobolevIndex {
public:
    constexpr explicit SobolevIndex(int s) : s_(s) {}
    [[nodiscard]] constexpr int value() const { return s_; }
    constexpr SobolevIndex operator-() const { return SobolevIndex(-s_); }
    constexpr SobolevIndex operator+(int k) const { return SobolevIndex(s_ + k); }
    constexpr SobolevIndex operator-(int k) const { return SobolevIndex(s_ - k); }
    constexpr bool operator==(const SobolevIndex&) const = default;

private:
    int s_;
};

double eigenvalue(const SpectralPoint& p);
/// (1 - lambda)^s
double sobolev_weight(const SpectralPoint& p, SobolevIndex s);

SpectralPoint make_cusp_point(const MaassFormData& f, std::size_t index);
SpectralPoint make_residual_point();
SpectralPoint make_eisenstein_point(double r);

struct GridOptions {
    double r_max = 12.0;
    int panels = 4;
    int nodes_per_panel = 32;
    double panel_ratio = 1.5;  // width growth toward r_max
};

/// Discretized spectral parameter space. Entries are ordered cusp points
/// (by r), the residual point, then Eisenstein nodes (increasing r).
/// Weights are 1 on the discrete part and Gauss-Legendre weights times
/// 1/(2 pi) on the Eisenstein line. Immutable; share through shared_ptr.
class SpectralGrid {
public:
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<SpectralPoint>& points() const { return points_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
    [[nodiscard]] const std::vector<MaassFormData>& forms() const { return forms_; }
    [[nodiscard]] const std::vector<MaassFormData>& source_forms() const { return source_forms_; }
    [[nodiscard]] std::size_t cusp_count() const { return cusp_count_; }
    [[nodiscard]] std::size_t residual_index() const { return cusp_count_; }
    [[nodiscard]] std::size_t eisenstein_begin() const { return cusp_count_ + 1; }
    [[nodiscard]] double r_max() const { return options_.r_max; }
    [[nodiscard]] const GridOptions& options() const { return options_; }

    friend std::shared_ptr<const SpectralGrid> build_grid(const std::vector<MaassFormData>& cusp_data,
                                                          const GridOptions& options);

private:
    SpectralGrid() = default;
    std::vector<SpectralPoint> points_;
    std::vector<double> weights_;
    std::vector<MaassFormData> forms_;
    std::vector<MaassFormData> source_forms_;  // including those above r_max
    std::size_t cusp_count_ = 0;
    GridOptions options_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Cusp forms with r > r_max are left out so both spectral parts share one
/// cutoff. Throws std::invalid_argument for r_max <= 0, panels < 1 or two
/// cusp parameters within 1e-9.
GridPtr build_grid(const std::vector<MaassFormData>& cusp_data, const GridOptions& options);
GridPtr build_grid(const std::vector<MaassFormData>& cusp_data, double r_max, int panels);

/// Same layout with r_max scaled, for tail-stability comparisons.
GridPtr with_r_max(const SpectralGrid& grid, double r_max);

}  // namespace autoheat
