#include "hexrwp/distance_dist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace hexrwp {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae >= 0).
constexpr std::array<double, 8> kXgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                     0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
constexpr std::size_t kNodes = 15;

enum class Mapping {
    Plain,     // variable is Δx itself
    LeftEnd,   // Δx = -r + t^2
    RightEnd,  // Δx =  r - t^2
};

struct Segment {
    double lo;
    double hi;
    Mapping map;
};

struct Estimate {
    double value;
    double error;
};

class SectionIntegrand {
public:
    SectionIntegrand(const HexRegion& region, const RefNode& ref, const AxisMarginal& mx, const AxisMarginal& my,
                     double radius)
        : region_(region), ref_(ref), mx_(mx), my_(my), radius_(radius) {}

    bool has_disk() const { return radius_ >= 0.0; }

    /// Values at `nodes` (in the segment's own variable) including the Jacobian.
    void evaluate(Mapping map, const std::array<double, kNodes>& nodes, std::array<double, kNodes>& out) const {
        std::array<double, kNodes> xs{};
        std::array<double, kNodes> half{};
        std::array<double, kNodes> jac{};
        const double inf = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kNodes; ++i) {
            const double t = nodes[i];
            double dx = t;
            switch (map) {
                case Mapping::Plain:
                    dx = t;
                    half[i] = has_disk() ? std::sqrt(std::max(0.0, radius_ * radius_ - dx * dx)) : inf;
                    jac[i] = 1.0;
                    break;
                case Mapping::LeftEnd:
                case Mapping::RightEnd:
                    dx = map == Mapping::LeftEnd ? -radius_ + t * t : radius_ - t * t;
                    half[i] = t * std::sqrt(std::max(0.0, 2.0 * radius_ - t * t));
                    jac[i] = 2.0 * t;
                    break;
            }
            xs[i] = std::clamp(dx + ref_.pos.x, 0.0, region_.width());
        }

        std::array<double, kNodes> fx{};
        mx_.stationary_pdf().evaluate(xs, fx);

        // Section bounds in absolute y, lower bounds then upper bounds.
        std::array<double, 2 * kNodes> ys{};
        std::array<bool, kNodes> empty{};
        const double top = region_.height();
        for (std::size_t i = 0; i < kNodes; ++i) {
            const auto [hex_lo, hex_hi] = region_.section(xs[i]);
            const double lo = std::max(hex_lo, ref_.pos.y - half[i]);
            const double hi = std::min(hex_hi, ref_.pos.y + half[i]);
            empty[i] = !(hi > lo);
            ys[i] = std::clamp(lo, 0.0, top);
            ys[kNodes + i] = std::clamp(hi, 0.0, top);
        }
        std::array<double, 2 * kNodes> fy{};
        my_.stationary_cdf().evaluate(ys, fy);

        for (std::size_t i = 0; i < kNodes; ++i) {
            out[i] = empty[i] ? 0.0 : jac[i] * fx[i] * std::max(0.0, fy[kNodes + i] - fy[i]);
        }
    }

    Estimate kronrod(const Segment& seg) const {
        const double center = 0.5 * (seg.lo + seg.hi);
        const double half_len = 0.5 * (seg.hi - seg.lo);
        std::array<double, kNodes> nodes{};
        for (std::size_t k = 0; k < 7; ++k) {
            nodes[2 * k] = center - half_len * kXgk[k];
            nodes[2 * k + 1] = center + half_len * kXgk[k];
        }
        nodes[14] = center;
        std::array<double, kNodes> f{};
        evaluate(seg.map, nodes, f);

        double kron = kWgk[7] * f[14];
        double gauss = kWg[3] * f[14];
        for (std::size_t k = 0; k < 7; ++k) {
            const double pair = f[2 * k] + f[2 * k + 1];
            kron += kWgk[k] * pair;
            if (k % 2 == 1) gauss += kWg[k / 2] * pair;
        }
        return {kron * half_len, std::abs((kron - gauss) * half_len)};
    }

private:
    const HexRegion& region_;
    const RefNode& ref_;
    const AxisMarginal& mx_;
    const AxisMarginal& my_;
    double radius_;
};

/// Real abscissae where the line through p with direction u meets the circle |q| = r.
void line_circle_abscissae(Point2 p, Point2 u, double r, std::vector<double>& out) {
    const double qa = u.x * u.x + u.y * u.y;
    const double qb = 2.0 * (u.x * p.x + u.y * p.y);
    const double qc = p.x * p.x + p.y * p.y - r * r;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    for (double t : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) out.push_back(p.x + t * u.x);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
    if (max_subdivisions < 4) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 4");
}

DistanceDistribution::DistanceDistribution(double side, RefNode ref, QuadratureSpec spec)
    : region_(side),
      ref_(ref),
      spec_(spec),
      mx_(AxisMarginal::build(Axis::X, side)),
      my_(AxisMarginal::build(Axis::Y, side)),
      mass_(0.0) {
    spec_.validate();
    if (!std::isfinite(ref.pos.x) || !std::isfinite(ref.pos.y)) {
        throw std::invalid_argument("DistanceDistribution: reference must be finite");
    }
    mass_ = region_mass(-1.0);
}

double DistanceDistribution::region_mass(double radius) const {
    const bool disk = radius >= 0.0;
    const double a = region_.side();
    const double x1 = ref_.pos.x;
    const double y1 = ref_.pos.y;

    // Strip of Δx covered by both the hexagon and the disk.
    double lo = -x1;
    double hi = region_.width() - x1;
    if (disk) {
        lo = std::max(lo, -radius);
        hi = std::min(hi, radius);
    }
    if (!(hi > lo)) return 0.0;

    // Kinks of the section bounds: hexagon corners (which are also the
    // breakpoints of the x-marginal) and every crossing of the circle with
    // an edge line or with the y-marginal's breakpoint line.
    std::vector<double> cuts{0.5 * a - x1, 1.5 * a - x1};
    if (disk) {
        const auto& v = region_.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 p = v[i] - ref_.pos;
            const Point2 u = v[(i + 1) % v.size()] - v[i];
            line_circle_abscissae(p, u, radius, cuts);
        }
        line_circle_abscissae({0.0, 0.5 * region_.height() - y1}, {1.0, 0.0}, radius, cuts);
    }
    std::sort(cuts.begin(), cuts.end());
    const double eps = 1e-13 * std::max(1.0, hi - lo);
    std::vector<double> knots{lo};
    for (double c : cuts) {
        if (c > knots.back() + eps && c < hi - eps) knots.push_back(c);
    }
    knots.push_back(hi);

    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double l = knots[i];
        const double r = knots[i + 1];
        const bool at_left_end = disk && i == 0 && l == -radius;
        const bool at_right_end = disk && i + 2 == knots.size() && r == radius;
        if (at_left_end && at_right_end) {
            // Disk fully inside the strip in x: split at its center.
            segments.push_back({0.0, std::sqrt(radius), Mapping::LeftEnd});
            segments.push_back({0.0, std::sqrt(radius), Mapping::RightEnd});
        } else if (at_left_end) {
            segments.push_back({0.0, std::sqrt(r + radius), Mapping::LeftEnd});
        } else if (at_right_end) {
            segments.push_back({0.0, std::sqrt(radius - l), Mapping::RightEnd});
        } else {
            segments.push_back({l, r, Mapping::Plain});
        }
    }

    const SectionIntegrand integrand(region_, ref_, mx_, my_, radius);
    struct Pending {
        Segment seg;
        int depth;
        double tol;
    };
    double total = 0.0;
    bool converged = true;
    const double seg_tol = spec_.abs_tol / static_cast<double>(segments.size());
    for (const Segment& top : segments) {
        std::vector<Pending> stack{{top, 0, seg_tol}};
        while (!stack.empty()) {
            const Pending p = stack.back();
            stack.pop_back();
            const Estimate e = integrand.kronrod(p.seg);
            if (e.error <= p.tol || p.seg.hi - p.seg.lo <= 0.0) {
                total += e.value;
                continue;
            }
            if (p.depth >= spec_.max_subdivisions) {
                converged = false;
                total += e.value;
                continue;
            }
            const double mid = 0.5 * (p.seg.lo + p.seg.hi);
            // Right half pushed first so the left half is summed first.
            stack.push_back({{mid, p.seg.hi, p.seg.map}, p.depth + 1, 0.5 * p.tol});
            stack.push_back({{p.seg.lo, mid, p.seg.map}, p.depth + 1, 0.5 * p.tol});
        }
    }
    if (!converged) {
        throw NumericError("distance quadrature did not converge within max_subdivisions", total);
    }
    return total;
}

double DistanceDistribution::cdf(double d) const {
    if (!(d >= 0.0)) throw std::invalid_argument("distance_cdf: d must be >= 0");
    if (d == 0.0) return 0.0;
    const double f = region_mass(d) / mass_;
    if (f < -spec_.abs_tol || f > 1.0 + spec_.abs_tol) {
        throw NumericError("distance_cdf: ratio outside [0,1] beyond tolerance", f);
    }
    return std::clamp(f, 0.0, 1.0);
}

CdfCurve DistanceDistribution::curve(int n_points) const {
    if (n_points < 2) throw std::invalid_argument("distance_cdf_curve: n_points must be >= 2");
    const DistanceExtremes ext = extremes();
    CdfCurve c;
    c.ref = ref_;
    c.side = region_.side();
    c.d_values.resize(static_cast<std::size_t>(n_points));
    c.cdf_values.resize(static_cast<std::size_t>(n_points));
    const double step = (ext.d_max - ext.d_min) / static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double d = i + 1 == n_points ? ext.d_max : ext.d_min + step * i;
        c.d_values[static_cast<std::size_t>(i)] = d;
        c.cdf_values[static_cast<std::size_t>(i)] = cdf(d);
    }
    // Quadrature noise must not break monotonicity.
    for (std::size_t i = 1; i < c.cdf_values.size(); ++i) {
        if (c.cdf_values[i] < c.cdf_values[i - 1]) {
            if (c.cdf_values[i - 1] - c.cdf_values[i] > spec_.abs_tol) {
                throw NumericError("distance_cdf_curve: non-monotone beyond tolerance", c.cdf_values[i]);
            }
            c.cdf_values[i] = c.cdf_values[i - 1];
        }
    }
    return c;
}

double product_mass_hexagon(const RefNode& ref, double side, const QuadratureSpec& spec) {
    return DistanceDistribution(side, ref, spec).hexagon_mass();
}

double distance_cdf(const RefNode& ref, double side, double d, const QuadratureSpec& spec) {
    return DistanceDistribution(side, ref, spec).cdf(d);
}

CdfCurve distance_cdf_curve(const RefNode& ref, double side, int n_points, const QuadratureSpec& spec) {
    return DistanceDistribution(side, ref, spec).curve(n_points);
}

}  // namespace hexrwp
