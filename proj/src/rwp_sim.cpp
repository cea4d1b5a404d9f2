#include "hexrwp/rwp_sim.hpp"

#include "hexrwp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexrwp {

void SimConfig::validate() const {
    if (!(side > 0.0) || !std::isfinite(side)) throw std::invalid_argument("SimConfig: side must be > 0");
    if (!(v_min > 0.0) || !(v_max >= v_min) || !std::isfinite(v_max)) {
        throw std::invalid_argument("SimConfig: need 0 < v_min <= v_max");
    }
    if (!(sample_interval > 0.0) || !std::isfinite(sample_interval)) {
        throw std::invalid_argument("SimConfig: sample_interval must be > 0");
    }
    if (!(duration >= 0.0) || !std::isfinite(duration)) throw std::invalid_argument("SimConfig: duration must be >= 0");
    if (duration > 0.0 && duration < sample_interval) {
        throw std::invalid_argument("SimConfig: duration must be 0 or >= sample_interval");
    }
    if (pause_time != 0.0) throw std::invalid_argument("SimConfig: only pause_time = 0 is supported");
}

std::vector<double> Trace::xs() const {
    std::vector<double> out(positions.size());
    std::transform(positions.begin(), positions.end(), out.begin(), [](const Point2& p) { return p.x; });
    return out;
}

std::vector<double> Trace::ys() const {
    std::vector<double> out(positions.size());
    std::transform(positions.begin(), positions.end(), out.begin(), [](const Point2& p) { return p.y; });
    return out;
}

Trace simulate(const SimConfig& config) {
    config.validate();
    const HexRegion region(config.side);
    RandomSource waypoint_rng(config.seed, Stream::Waypoints);
    RandomSource speed_rng(config.seed, Stream::Speeds);

    Trace trace;
    trace.config = config;
    const auto n_samples = static_cast<std::size_t>(std::floor(config.duration / config.sample_interval)) + 1;
    trace.positions.reserve(n_samples);

    Point2 from = region.sample_uniform(waypoint_rng);
    trace.waypoints.push_back(from);
    Point2 to = from;
    double leg_start = 0.0;
    double leg_end = 0.0;

    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = static_cast<double>(k) * config.sample_interval;
        while (t > leg_end) {
            from = to;
            leg_start = leg_end;
            to = region.sample_uniform(waypoint_rng);
            trace.waypoints.push_back(to);
            const double speed = speed_rng.uniform(config.v_min, config.v_max);
            leg_end = leg_start + distance(from, to) / speed;
        }
        const double span = leg_end - leg_start;
        const double frac = span > 0.0 ? std::clamp((t - leg_start) / span, 0.0, 1.0) : 1.0;
        trace.positions.push_back(from + (to - from) * frac);
    }
    return trace;
}

std::vector<double> distances_to(const Trace& trace, const RefNode& ref) {
    const std::vector<double> xs = trace.xs();
    const std::vector<double> ys = trace.ys();
    std::vector<double> out(xs.size());
    kernels::distances(xs, ys, ref.pos.x, ref.pos.y, out);
    return out;
}

std::vector<double> uniform_node_distances(const HexRegion& region, const RefNode& ref, std::size_t n,
                                           RandomSource& rng) {
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = region.sample_uniform(rng);
        xs[i] = p.x;
        ys[i] = p.y;
    }
    std::vector<double> out(n);
    kernels::distances(xs, ys, ref.pos.x, ref.pos.y, out);
    return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("ecdf: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double d) const {
    const auto below = std::lower_bound(sorted_.begin(), sorted_.end(), d) - sorted_.begin();
    return static_cast<double>(below) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::at_or_below(double d) const {
    const auto upto = std::upper_bound(sorted_.begin(), sorted_.end(), d) - sorted_.begin();
    return static_cast<double>(upto) / static_cast<double>(sorted_.size());
}

EmpiricalCdf ecdf(std::vector<double> samples) { return EmpiricalCdf(std::move(samples)); }

double ks_statistic(const EmpiricalCdf& emp, const std::function<double(double)>& model) {
    const auto& s = emp.sorted_samples();
    const double n = static_cast<double>(s.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        const double m = model(s[i]);
        worst = std::max({worst, std::abs(m - static_cast<double>(i) / n), std::abs(m - static_cast<double>(j) / n)});
        i = j;
    }
    return worst;
}

double ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b) {
    // Both step functions only jump at sample points; compare just after each jump.
    const auto& sa = a.sorted_samples();
    const auto& sb = b.sorted_samples();
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0.0;
    while (i < sa.size() || j < sb.size()) {
        const double d = (j >= sb.size() || (i < sa.size() && sa[i] <= sb[j])) ? sa[i] : sb[j];
        while (i < sa.size() && sa[i] <= d) ++i;
        while (j < sb.size() && sb[j] <= d) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

}  // namespace hexrwp
