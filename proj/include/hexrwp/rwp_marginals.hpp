#pragma once
/**
 * @file rwp_marginals.hpp
 * @brief Per-axis stationary distribution of a random-waypoint node in the hexagon.
 *
 * Along each axis, leg endpoints follow the waypoint density f_S (the
 * hexagon's projected section length over its area). The stationary CDF of
 * the moving node's coordinate is E[L_c] / E[L], where L is the projected leg
 * length and L_c the part of it below coordinate c.
 *
 * Both expectations are produced by exact polynomial integration of every
 * (start piece, destination piece) case of the double integral; the printed
 * closed forms are kept only as a cross-check (validate_printed_forms).
 */

#include "hexrwp/polynomial.hpp"

#include <string>
#include <vector>

namespace hexrwp {

enum class Axis { X, Y };

/// One (start interval, destination interval) case of the half expectation
/// 1/2 E[L_c] for c inside a given branch, as a polynomial in c.
struct ExpectationTerm {
    std::size_t start_piece;
    std::size_t dest_piece;
    Polynomial half_value;
};

/// Result of comparing one housed printed formula against the integral-derived one.
struct FormCheck {
    std::string name;
    std::size_t branch;
    double max_abs_diff;
    bool matches;
};

class AxisMarginal {
public:
    /// Throws std::invalid_argument unless side > 0.
    static AxisMarginal build(Axis axis, double side);

    Axis axis() const { return axis_; }
    double side() const { return side_; }
    /// Right end of the coordinate range: 2a for X, sqrt(3)a for Y.
    double extent() const { return waypoint_pdf_.upper(); }

    const PiecewisePolynomial& waypoint_pdf() const { return waypoint_pdf_; }
    /// E[L_c] including the factor two for the s > d half.
    const PiecewisePolynomial& truncated_expectation() const { return truncated_expectation_; }
    const PiecewisePolynomial& stationary_cdf() const { return stationary_cdf_; }
    const PiecewisePolynomial& stationary_pdf() const { return stationary_pdf_; }
    double expected_leg() const { return expected_leg_; }

    /// Case decomposition for coordinates in waypoint piece `branch`.
    const std::vector<ExpectationTerm>& case_terms(std::size_t branch) const { return case_terms_.at(branch); }
    std::size_t branch_count() const { return case_terms_.size(); }

    /// Density of (coordinate - ref_coord) at delta; zero outside the support.
    double shifted_pdf(double delta, double ref_coord) const;

    /// Compare the closed forms as printed against the derived polynomials.
    /// Entries with matches == false are known transcription errors in the source.
    std::vector<FormCheck> validate_printed_forms(double tolerance = 1e-9) const;

private:
    AxisMarginal() = default;

    Axis axis_{Axis::X};
    double side_{1.0};
    PiecewisePolynomial waypoint_pdf_;
    PiecewisePolynomial truncated_expectation_;
    PiecewisePolynomial stationary_cdf_;
    PiecewisePolynomial stationary_pdf_;
    double expected_leg_{0.0};
    std::vector<std::vector<ExpectationTerm>> case_terms_;
};

/// Shared side-1 marginal; the free functions below rescale it.
const AxisMarginal& unit_marginal(Axis axis);

// Raw-domain functions: out-of-range arguments throw std::out_of_range, side <= 0
// throws std::invalid_argument.
double waypoint_pdf_x(double s, double side);
double waypoint_pdf_y(double s, double side);
double expected_leg_x(double side);
double expected_leg_y(double side);
double expected_lx(double x, double side);
double expected_ly(double y, double side);
double stationary_cdf_x(double x, double side);
double stationary_cdf_y(double y, double side);
double stationary_pdf_x(double x, double side);
double stationary_pdf_y(double y, double side);

// Shifted densities vanish outside the support instead of throwing.
double shifted_pdf_dx(double dx, double x1, double side);
double shifted_pdf_dy(double dy, double y1, double side);

}  // namespace hexrwp
