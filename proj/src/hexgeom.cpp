#include "hexrwp/hexgeom.hpp"

#include "hexrwp/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hexrwp {

namespace {

double cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

HexRegion::HexRegion(double side) : side_(side) {
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw std::invalid_argument("HexRegion: side must be finite and > 0");
    }
    const double h = std::numbers::sqrt3 * side;
    vertices_ = {Point2{0.0, 0.5 * h},         Point2{0.5 * side, 0.0}, Point2{1.5 * side, 0.0},
                 Point2{2.0 * side, 0.5 * h}, Point2{1.5 * side, h},   Point2{0.5 * side, h}};
}

bool HexRegion::contains(const Point2& p) const {
    // Counterclockwise vertices: inside means left of (or on) every edge.
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) < 0.0) return false;
    }
    return true;
}

Point2 HexRegion::sample_uniform(RandomSource& rng) const {
    const double w = width();
    const double h = height();
    for (;;) {
        Point2 p{w * rng.uniform01(), h * rng.uniform01()};
        if (contains(p)) return p;
    }
}

std::pair<double, double> HexRegion::section(double x) const {
    const double h = height();
    if (x < 0.0 || x > 2.0 * side_) return {1.0, 0.0};
    double half;
    if (x < 0.5 * side_) {
        half = std::numbers::sqrt3 * x;
    } else if (x > 1.5 * side_) {
        half = std::numbers::sqrt3 * (2.0 * side_ - x);
    } else {
        return {0.0, h};
    }
    return {std::max(0.0, 0.5 * h - half), std::min(h, 0.5 * h + half)};
}

DistanceExtremes HexRegion::distance_extremes(const RefNode& ref) const {
    DistanceExtremes out;
    for (const auto& v : vertices_) out.d_max = std::max(out.d_max, distance(ref.pos, v));
    if (contains(ref.pos)) return out;
    out.d_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        out.d_min = std::min(out.d_min, point_segment_distance(ref.pos, vertices_[i],
                                                               vertices_[(i + 1) % vertices_.size()]));
    }
    return out;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return distance(p, a);
    const Point2 ap = p - a;
    const double t = std::clamp((ap.x * ab.x + ap.y * ab.y) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

}  // namespace hexrwp
