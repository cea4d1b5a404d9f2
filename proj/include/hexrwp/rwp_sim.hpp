#pragma once
/**
 * @file rwp_sim.hpp
 * @brief Random-waypoint trace generation inside the hexagon and empirical CDF tools.
 *
 * A trace starts at a uniform point, then repeatedly draws a uniform
 * destination and a per-leg speed uniform on [v_min, v_max], moving in a
 * straight line with no pause. Positions are recorded at exact multiples of
 * the sample interval by interpolating along the leg in progress.
 *
 * Waypoints and speeds come from separate streams derived from the seed, so
 * two configurations that differ only in speeds share the same waypoint
 * sequence.
 */

#include "hexrwp/hexgeom.hpp"
#include "hexrwp/random.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hexrwp {

struct SimConfig {
    double side{1.0};
    double v_min{0.01};
    double v_max{0.05};
    double duration{1e5};
    double sample_interval{1.0};
    std::uint64_t seed{0};
    double pause_time{0.0};

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
};

struct Trace {
    std::vector<Point2> positions;
    /// Leg endpoints visited, starting with the initial position.
    std::vector<Point2> waypoints;
    SimConfig config;

    /// Structure-of-arrays copies of the sampled coordinates.
    std::vector<double> xs() const;
    std::vector<double> ys() const;
};

Trace simulate(const SimConfig& config);

/// Euclidean distance of every sampled position to ref, in order.
std::vector<double> distances_to(const Trace& trace, const RefNode& ref);

/// Distances from n i.i.d. uniform points in the region.
std::vector<double> uniform_node_distances(const HexRegion& region, const RefNode& ref, std::size_t n,
                                           RandomSource& rng);

/// Step-function estimate F(d) = #{samples < d} / n.
class EmpiricalCdf {
public:
    /// Throws std::invalid_argument for an empty sample.
    explicit EmpiricalCdf(std::vector<double> samples);

    double operator()(double d) const;
    /// #{samples <= d} / n.
    double at_or_below(double d) const;

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_samples() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

EmpiricalCdf ecdf(std::vector<double> samples);

/// sup |F_emp - model| over the sample points, checking both sides of each step.
double ks_statistic(const EmpiricalCdf& emp, const std::function<double(double)>& model);

/// Two-sample statistic sup_d |F1(d) - F2(d)|.
double ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b);

}  // namespace hexrwp
