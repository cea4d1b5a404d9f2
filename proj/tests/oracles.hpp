#pragma once
// Test-only reference computations. Nothing here calls into the code paths it
// is used to check: the case integrals are transcribed literally and solved by
// Gauss-Legendre, densities are the published formulas (with the two
// misprints corrected), and sampling uses plain rejection.

#include "hexrwp/hexgeom.hpp"
#include "hexrwp/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hexrwp::oracle {

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// ∫_{s_lo}^{s_hi} ∫_{d_lo(s)}^{d_hi(s)} f(s, d) dd ds by a tensor Gauss-Legendre rule.
double integrate_2d(const std::function<double(double, double)>& f, double s_lo, double s_hi,
                    const std::function<double(double)>& d_lo, const std::function<double(double)>& d_hi,
                    int order = 24);

/// One row of a case table: a double integral that depends on the coordinate c.
struct CaseRow {
    std::size_t start_piece;
    std::size_t dest_piece;
    std::function<double(double c)> half_value;
};

/// Rows of 1/2 E(L) (coordinate ignored) for the given axis, side a.
std::vector<CaseRow> expected_leg_rows(bool x_axis, double a);

/// Rows of 1/2 E(L_c) for c inside waypoint piece `branch`, side a.
std::vector<CaseRow> truncated_rows(bool x_axis, std::size_t branch, double a);

/// Branch boundaries of the waypoint density.
std::vector<double> waypoint_breaks(bool x_axis, double a);

/// Published stationary densities with corrected coefficients.
double pdf_x_reference(double x, double a);
double pdf_y_reference(double y, double a);

/// Draw (x, y) with x ~ f_X and y ~ f_Y independently, rejecting points outside the
/// hexagon. `attempts` counts all pairs drawn, accepted or not.
struct ProductSample {
    std::vector<double> xs;
    std::vector<double> ys;
    std::uint64_t attempts{0};
};
ProductSample sample_product_density(double a, std::size_t accepted, RandomSource& rng);

/// Minimum distance from p to a dense uniform discretization of the boundary.
double boundary_min_distance(const HexRegion& region, const Point2& p, std::size_t points);

/// Pearson statistic of points over the 12 equal-area 30° sectors around the centroid.
double fan_chi_square(const HexRegion& region, const std::vector<Point2>& pts);

/// 0.999 quantile of chi-square with 11 degrees of freedom.
inline constexpr double kChiSquare11_999 = 31.264133620239985;

}  // namespace hexrwp::oracle
