#pragma once
/**
 * @file distance_dist.hpp
 * @brief Analytic CDF of the distance between the mobile node and a reference node.
 *
 * With the joint stationary density approximated by the product of the two
 * axis marginals, F(d) is the product-density mass of (hexagon ∩ disk of
 * radius d around the reference) divided by the mass of the hexagon, both
 * taken in coordinates relative to the reference node.
 *
 * The y-direction is integrated exactly: every vertical section of the
 * hexagon ∩ disk region is an interval, so its mass is a difference of the
 * stationary y-CDF. The remaining one-dimensional integral over Δx is split
 * at every kink of the section bounds and evaluated by adaptive
 * Gauss-Kronrod; intervals ending at the disk's extreme abscissae use a
 * square-root substitution so the integrand stays smooth there.
 */

#include "hexrwp/hexgeom.hpp"
#include "hexrwp/rwp_marginals.hpp"

#include <stdexcept>
#include <vector>

namespace hexrwp {

enum class QuadratureRule { GaussKronrod15 };

struct QuadratureSpec {
    double abs_tol{1e-6};
    int max_subdivisions{20};  ///< bisection depth limit per subinterval
    QuadratureRule rule{QuadratureRule::GaussKronrod15};

    /// Throws std::invalid_argument unless abs_tol > 0 and max_subdivisions >= 4.
    void validate() const;
};

/// Quadrature failed to reach the requested tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

struct CdfCurve {
    std::vector<double> d_values;
    std::vector<double> cdf_values;
    RefNode ref;
    double side{1.0};
};

/// Product-density distance distribution for one (side, reference) pair.
class DistanceDistribution {
public:
    DistanceDistribution(double side, RefNode ref, QuadratureSpec spec = {});

    const HexRegion& region() const { return region_; }
    const RefNode& ref() const { return ref_; }
    DistanceExtremes extremes() const { return region_.distance_extremes(ref_); }

    /// Product-density mass of the hexagon; does not depend on the reference.
    double hexagon_mass() const { return mass_; }

    /// Pr(D < d). Throws std::invalid_argument for d < 0, NumericError on failure.
    double cdf(double d) const;

    /// n_points >= 2 uniformly spaced distances over [d_min, d_max].
    CdfCurve curve(int n_points) const;

private:
    /// Mass of the hexagon intersected with the disk of radius d (d < 0: no disk).
    double region_mass(double radius) const;

    HexRegion region_;
    RefNode ref_;
    QuadratureSpec spec_;
    AxisMarginal mx_;
    AxisMarginal my_;
    double mass_;
};

double product_mass_hexagon(const RefNode& ref, double side, const QuadratureSpec& spec = {});
double distance_cdf(const RefNode& ref, double side, double d, const QuadratureSpec& spec = {});
CdfCurve distance_cdf_curve(const RefNode& ref, double side, int n_points, const QuadratureSpec& spec = {});

}  // namespace hexrwp
