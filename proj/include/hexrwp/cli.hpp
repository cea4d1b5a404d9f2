#pragma once
/**
 * @file cli.hpp
 * @brief Command layer behind the `hexrwp` executable.
 *
 * Exit codes are a stable scripting contract: 0 success or comparison pass,
 * 1 comparison fail, 2 usage or input error, 3 numeric failure.
 */

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexrwp::cli {

enum ExitCode : int { kOk = 0, kCompareFail = 1, kUsage = 2, kNumeric = 3 };

// ---------------------------------------------------------------------------
// CSV and manifest helpers

/// Locale-independent shortest-round-trip formatting with 17 significant digits.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
    /// Index of a named column or -1.
    int column(const std::string& name) const;
};

/// Throws std::runtime_error when the file cannot be opened or written.
void write_csv(const std::string& path, const CsvTable& table);

/// Throws std::runtime_error on I/O failure and CsvError on malformed content.
CsvTable read_csv(const std::string& path);

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Manifest = std::vector<std::pair<std::string, std::string>>;

/// Writes `key=value` lines to `<out_path>.manifest`.
void write_manifest(const std::string& out_path, const Manifest& entries);

// ---------------------------------------------------------------------------
// Commands

struct MarginalsArgs {
    double side{1.0};
    std::string axis{"x"};
    int grid_n{101};
    std::string out;
};

struct DistanceCdfArgs {
    double side{1.0};
    double ref_x{0.0};
    double ref_y{0.0};
    int grid_n{201};
    double tol{1e-6};
    std::string out;
};

struct SimulateArgs {
    double side{1.0};
    double ref_x{0.0};
    double ref_y{0.0};
    double v_min{0.01};
    double v_max{0.05};
    double duration{1e5};
    double dt{1.0};
    std::uint64_t seed{0};
    std::string out;
};

struct BaselineArgs {
    double side{1.0};
    double ref_x{0.0};
    double ref_y{0.0};
    std::size_t n{100000};
    std::uint64_t seed{0};
    std::string out;
};

struct CompareArgs {
    std::string analytic;
    std::string empirical;
    double threshold{0.05};
};

struct CompareResult {
    double ks{0.0};
    double at_d{0.0};
};

/// Supremum distance between the CDFs stored in two CSV files. `d,cdf` and
/// `coord,pdf,cdf` files are read as piecewise-linear curves, `d,ecdf` files
/// as right-continuous step functions; both sides of every jump are checked.
CompareResult compare_files(const std::string& a, const std::string& b);

int cmd_marginals(const MarginalsArgs& args, std::ostream& err);
int cmd_distance_cdf(const DistanceCdfArgs& args, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& err);
int cmd_baseline(const BaselineArgs& args, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);

/// Parse argv and dispatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexrwp::cli
