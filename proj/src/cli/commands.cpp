#include "hexrwp/cli.hpp"

#include "hexrwp/distance_dist.hpp"
#include "hexrwp/kernels.hpp"
#include "hexrwp/rwp_marginals.hpp"
#include "hexrwp/rwp_sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <ostream>

#ifndef HEXRWP_VERSION
#define HEXRWP_VERSION "0.0.0"
#endif

namespace hexrwp::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
    return format_double(std::chrono::duration<double>(Clock::now() - start).count());
}

Manifest base_manifest(const std::string& command) {
    return {{"command", command}, {"tool_version", HEXRWP_VERSION}, {"kernel_isa", std::string(kernels::active().name)}};
}

/// Sorted unique samples with the fraction of samples <= each.
CsvTable ecdf_table(std::vector<double> samples) {
    const EmpiricalCdf emp(std::move(samples));
    CsvTable t{{"d", "ecdf"}, {{}, {}}};
    const auto& s = emp.sorted_samples();
    const double n = static_cast<double>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
        t.columns[0].push_back(s[i]);
        t.columns[1].push_back(static_cast<double>(i + 1) / n);
    }
    return t;
}

/// A CDF read from disk, evaluable at a point and just left of it.
class StoredCdf {
public:
    explicit StoredCdf(const CsvTable& t) {
        int dc = t.column("d");
        int vc = t.column("ecdf");
        step_ = vc >= 0;
        if (!step_) vc = t.column("cdf");
        if (dc < 0) dc = t.column("coord");
        if (dc < 0 || vc < 0 || t.rows() == 0) {
            throw CsvError("expected columns d,cdf | d,ecdf | coord,pdf,cdf with at least one row");
        }
        d_ = t.columns[static_cast<std::size_t>(dc)];
        v_ = t.columns[static_cast<std::size_t>(vc)];
        for (std::size_t i = 1; i < d_.size(); ++i) {
            if (!(d_[i] > d_[i - 1])) throw CsvError("distance column must be strictly increasing");
        }
    }

    const std::vector<double>& points() const { return d_; }

    double at(double z) const { return eval(z, false); }
    double left_of(double z) const { return eval(z, true); }

private:
    double eval(double z, bool left) const {
        if (step_) {
            // Last row with d <= z (or d < z for the left limit).
            const auto it = left ? std::lower_bound(d_.begin(), d_.end(), z) : std::upper_bound(d_.begin(), d_.end(), z);
            return it == d_.begin() ? 0.0 : v_[static_cast<std::size_t>(it - d_.begin()) - 1];
        }
        if (z < d_.front() || (left && z == d_.front())) return 0.0;
        if (z > d_.back()) return 1.0;
        const auto it = std::lower_bound(d_.begin(), d_.end(), z);
        const auto i = static_cast<std::size_t>(it - d_.begin());
        if (d_[i] == z) return v_[i];
        const double w = (z - d_[i - 1]) / (d_[i] - d_[i - 1]);
        return v_[i - 1] + w * (v_[i] - v_[i - 1]);
    }

    bool step_{false};
    std::vector<double> d_;
    std::vector<double> v_;
};

}  // namespace

CompareResult compare_files(const std::string& a, const std::string& b) {
    const StoredCdf fa(read_csv(a));
    const StoredCdf fb(read_csv(b));
    CompareResult r;
    auto visit = [&](double z) {
        const double gap = std::max(std::abs(fa.at(z) - fb.at(z)), std::abs(fa.left_of(z) - fb.left_of(z)));
        if (gap > r.ks) {
            r.ks = gap;
            r.at_d = z;
        }
    };
    for (double z : fa.points()) visit(z);
    for (double z : fb.points()) visit(z);
    return r;
}

int cmd_marginals(const MarginalsArgs& args, std::ostream& err) {
    const auto start = Clock::now();
    if (args.grid_n < 2) {
        err << "marginals: --grid-n must be >= 2\n";
        return kUsage;
    }
    if (args.axis != "x" && args.axis != "y") {
        err << "marginals: --axis must be x or y\n";
        return kUsage;
    }
    const Axis axis = args.axis == "x" ? Axis::X : Axis::Y;
    const AxisMarginal m = AxisMarginal::build(axis, args.side);
    const double end = m.extent();
    CsvTable t{{"coord", "pdf", "cdf"}, {{}, {}, {}}};
    for (int i = 0; i < args.grid_n; ++i) {
        const double c = i + 1 == args.grid_n ? end : end * i / (args.grid_n - 1);
        t.columns[0].push_back(c);
        t.columns[1].push_back(m.stationary_pdf()(c));
        t.columns[2].push_back(m.stationary_cdf()(c));
    }
    write_csv(args.out, t);

    Manifest man = base_manifest("marginals");
    man.insert(man.end(), {{"side", format_double(args.side)},
                           {"axis", args.axis},
                           {"grid_n", std::to_string(args.grid_n)},
                           {"out", args.out},
                           {"expected_leg", format_double(m.expected_leg())}});
    for (const FormCheck& c : m.validate_printed_forms()) {
        man.emplace_back("printed_form." + c.name + "." + std::to_string(c.branch),
                         (c.matches ? "ok " : "mismatch ") + format_double(c.max_abs_diff));
    }
    man.emplace_back("wall_clock_seconds", seconds_since(start));
    write_manifest(args.out, man);
    return kOk;
}

int cmd_distance_cdf(const DistanceCdfArgs& args, std::ostream& err) {
    const auto start = Clock::now();
    if (args.grid_n < 2 || !(args.tol > 0.0)) {
        err << "distance-cdf: need --grid-n >= 2 and --tol > 0\n";
        return kUsage;
    }
    QuadratureSpec spec;
    spec.abs_tol = args.tol;
    CdfCurve curve;
    try {
        curve = DistanceDistribution(args.side, RefNode(args.ref_x, args.ref_y), spec).curve(args.grid_n);
    } catch (const NumericError& e) {
        err << "distance-cdf: " << e.what() << " (estimate " << format_double(e.estimate()) << ")\n";
        return kNumeric;
    }
    write_csv(args.out, CsvTable{{"d", "cdf"}, {curve.d_values, curve.cdf_values}});

    Manifest man = base_manifest("distance-cdf");
    man.insert(man.end(), {{"side", format_double(args.side)},
                           {"ref_x", format_double(args.ref_x)},
                           {"ref_y", format_double(args.ref_y)},
                           {"grid_n", std::to_string(args.grid_n)},
                           {"tol", format_double(args.tol)},
                           {"out", args.out},
                           {"wall_clock_seconds", seconds_since(start)}});
    write_manifest(args.out, man);
    return kOk;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& /*err*/) {
    const auto start = Clock::now();
    SimConfig cfg;
    cfg.side = args.side;
    cfg.v_min = args.v_min;
    cfg.v_max = args.v_max;
    cfg.duration = args.duration;
    cfg.sample_interval = args.dt;
    cfg.seed = args.seed;
    const Trace trace = simulate(cfg);  // invalid config throws std::invalid_argument
    const CsvTable t = ecdf_table(distances_to(trace, RefNode(args.ref_x, args.ref_y)));
    write_csv(args.out, t);

    Manifest man = base_manifest("simulate");
    man.insert(man.end(), {{"side", format_double(args.side)},
                           {"ref_x", format_double(args.ref_x)},
                           {"ref_y", format_double(args.ref_y)},
                           {"v_min", format_double(args.v_min)},
                           {"v_max", format_double(args.v_max)},
                           {"duration", format_double(args.duration)},
                           {"dt", format_double(args.dt)},
                           {"seed", std::to_string(args.seed)},
                           {"samples", std::to_string(trace.positions.size())},
                           {"legs", std::to_string(trace.waypoints.size() - 1)},
                           {"out", args.out},
                           {"wall_clock_seconds", seconds_since(start)}});
    write_manifest(args.out, man);
    return kOk;
}

int cmd_baseline(const BaselineArgs& args, std::ostream& err) {
    const auto start = Clock::now();
    if (args.n < 1) {
        err << "baseline: --n must be >= 1\n";
        return kUsage;
    }
    const HexRegion region(args.side);
    RandomSource rng(args.seed, Stream::Baseline);
    write_csv(args.out, ecdf_table(uniform_node_distances(region, RefNode(args.ref_x, args.ref_y), args.n, rng)));

    Manifest man = base_manifest("baseline");
    man.insert(man.end(), {{"side", format_double(args.side)},
                           {"ref_x", format_double(args.ref_x)},
                           {"ref_y", format_double(args.ref_y)},
                           {"n", std::to_string(args.n)},
                           {"seed", std::to_string(args.seed)},
                           {"out", args.out},
                           {"wall_clock_seconds", seconds_since(start)}});
    write_manifest(args.out, man);
    return kOk;
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& /*err*/) {
    const CompareResult r = compare_files(args.analytic, args.empirical);
    const bool pass = r.ks < args.threshold;
    out << "ks=" << format_double(r.ks) << " at_d=" << format_double(r.at_d) << " threshold=" << format_double(args.threshold)
        << ' ' << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kCompareFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance distribution of a random-waypoint node in a regular hexagon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", HEXRWP_VERSION);

    MarginalsArgs marg;
    auto* m = app.add_subcommand("marginals", "Stationary per-axis PDF and CDF on a uniform grid");
    m->add_option("--side", marg.side, "Hexagon side length")->check(CLI::PositiveNumber);
    m->add_option("--axis", marg.axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    m->add_option("--grid-n", marg.grid_n, "Number of grid points")->check(CLI::Range(2, INT_MAX));
    m->add_option("--out", marg.out, "Output CSV (coord,pdf,cdf)")->required();

    DistanceCdfArgs dist;
    auto* d = app.add_subcommand("distance-cdf", "Analytic distance CDF over [d_min, d_max]");
    d->add_option("--side", dist.side)->check(CLI::PositiveNumber);
    d->add_option("--ref-x", dist.ref_x);
    d->add_option("--ref-y", dist.ref_y);
    d->add_option("--grid-n", dist.grid_n)->check(CLI::Range(2, INT_MAX));
    d->add_option("--tol", dist.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    d->add_option("--out", dist.out, "Output CSV (d,cdf)")->required();

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Simulate a trace and write the distance ECDF");
    s->add_option("--side", sim.side)->check(CLI::PositiveNumber);
    s->add_option("--ref-x", sim.ref_x);
    s->add_option("--ref-y", sim.ref_y);
    s->add_option("--v-min", sim.v_min);
    s->add_option("--v-max", sim.v_max);
    s->add_option("--duration", sim.duration);
    s->add_option("--dt", sim.dt);
    s->add_option("--seed", sim.seed)->required();
    s->add_option("--out", sim.out, "Output CSV (d,ecdf)")->required();

    BaselineArgs base;
    auto* b = app.add_subcommand("baseline", "Distance ECDF of uniformly placed nodes");
    b->add_option("--side", base.side)->check(CLI::PositiveNumber);
    b->add_option("--ref-x", base.ref_x);
    b->add_option("--ref-y", base.ref_y);
    b->add_option("--n", base.n)->check(CLI::PositiveNumber);
    b->add_option("--seed", base.seed)->required();
    b->add_option("--out", base.out, "Output CSV (d,ecdf)")->required();

    CompareArgs cmp;
    auto* c = app.add_subcommand("compare", "KS distance between two CDF files");
    c->add_option("analytic_csv", cmp.analytic)->required()->check(CLI::ExistingFile);
    c->add_option("empirical_csv", cmp.empirical)->required()->check(CLI::ExistingFile);
    c->add_option("--threshold", cmp.threshold, "Pass when KS is below this")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << HEXRWP_VERSION << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*m) return cmd_marginals(marg, err);
        if (*d) return cmd_distance_cdf(dist, err);
        if (*s) return cmd_simulate(sim, err);
        if (*b) return cmd_baseline(base, err);
        if (*c) return cmd_compare(cmp, out, err);
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const CsvError& e) {
        err << "malformed input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hexrwp::cli
