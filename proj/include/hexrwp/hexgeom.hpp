#pragma once
/**
 * @file hexgeom.hpp
 * @brief Regular hexagon cell in the frame used throughout the library.
 *
 * The hexagon of side a is placed with its bounding box at [0,2a] x [0,sqrt(3)a]:
 * two horizontal edges (bottom and top), the left and right vertices on the
 * horizontal midline y = sqrt(3)a/2. Coordinates are in the same length unit
 * as the side.
 */

#include <array>
#include <cmath>
#include <numbers>

namespace hexrwp {

class RandomSource;

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2() = default;
    constexpr Point2(double X, double Y) : x(X), y(Y) {}

    constexpr Point2 operator+(const Point2& r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Point2&) const = default;

    double norm() const { return std::sqrt(x * x + y * y); }
};

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Reference node position; may lie anywhere in the plane.
struct RefNode {
    Point2 pos;

    constexpr RefNode() = default;
    constexpr RefNode(double x, double y) : pos(x, y) {}
    constexpr explicit RefNode(Point2 p) : pos(p) {}
};

struct DistanceExtremes {
    double d_min{0.0};
    double d_max{0.0};
};

class HexRegion {
public:
    /// Throws std::invalid_argument unless side is finite and > 0.
    explicit HexRegion(double side);

    double side() const { return side_; }
    double width() const { return 2.0 * side_; }
    double height() const { return std::numbers::sqrt3 * side_; }
    double area() const { return 1.5 * std::numbers::sqrt3 * side_ * side_; }
    Point2 centroid() const { return {side_, 0.5 * std::numbers::sqrt3 * side_}; }

    /// Counterclockwise, starting at the left vertex (0, sqrt(3)a/2).
    const std::array<Point2, 6>& vertices() const { return vertices_; }

    /// Closed hexagon: boundary points are inside.
    bool contains(const Point2& p) const;

    /// Uniform point by rejection from the bounding box.
    Point2 sample_uniform(RandomSource& rng) const;

    /// y-extent of the vertical section at x; empty (lo > hi) outside [0, 2a].
    std::pair<double, double> section(double x) const;

    DistanceExtremes distance_extremes(const RefNode& ref) const;

private:
    double side_;
    std::array<Point2, 6> vertices_;
};

/// Distance from p to the closed segment [a, b].
double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);

}  // namespace hexrwp
