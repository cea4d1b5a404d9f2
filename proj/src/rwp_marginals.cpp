#include "hexrwp/rwp_marginals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace hexrwp {

namespace {

constexpr std::size_t kCoord = 0;
constexpr std::size_t kStart = 1;
constexpr std::size_t kDest = 2;

void require_side(double side) {
    if (!(side > 0.0) || !std::isfinite(side)) throw std::invalid_argument("side must be finite and > 0");
}

PiecewisePolynomial waypoint_density(Axis axis, double a) {
    const double r3 = std::numbers::sqrt3;
    if (axis == Axis::X) {
        return {{0.0, 0.5 * a, 1.5 * a, 2.0 * a},
                {Polynomial({0.0, 4.0 / (3.0 * a * a)}), Polynomial({2.0 / (3.0 * a)}),
                 Polynomial({8.0 / (3.0 * a), -4.0 / (3.0 * a * a)})}};
    }
    return {{0.0, 0.5 * r3 * a, r3 * a},
            {Polynomial({2.0 * r3 / (9.0 * a), 4.0 / (9.0 * a * a)}),
             Polynomial({6.0 * r3 / (9.0 * a), -4.0 / (9.0 * a * a)})}};
}

/// Integral over start in [s_lo, s_hi] and destination in [d_lo, d_hi] (limits
/// may involve the coordinate and, for d, the start) of weight * f_i(s) f_j(d).
Polynomial case_integral(const MultiPolynomial& weight, const MultiPolynomial& f_start,
                         const MultiPolynomial& f_dest, const MultiPolynomial& d_lo,
                         const MultiPolynomial& d_hi, const MultiPolynomial& s_lo,
                         const MultiPolynomial& s_hi) {
    return (weight * f_start * f_dest).integrate(kDest, d_lo, d_hi).integrate(kStart, s_lo, s_hi).to_univariate(kCoord);
}

/// Cases of 1/2 E[L_c] for c in waypoint piece k. With s < d the leg covers
/// [s, d]; the part below c is d - s when d <= c and c - s when s < c < d.
std::vector<ExpectationTerm> half_expectation_terms(const PiecewisePolynomial& density, std::size_t k) {
    using MP = MultiPolynomial;
    const auto& b = density.breakpoints();
    const std::size_t n = density.pieces().size();
    const MP c = MP::variable(kCoord);
    const MP s = MP::variable(kStart);
    const MP d = MP::variable(kDest);
    const MP whole = d - s;
    const MP partial = c - s;
    auto at = [&](std::size_t i) { return MP::constant(b[i]); };

    std::vector<ExpectationTerm> terms;
    for (std::size_t i = 0; i <= k && i < n; ++i) {
        const MP fs = MP::lift(density.pieces()[i], kStart);
        for (std::size_t j = i; j < n; ++j) {
            const MP fd = MP::lift(density.pieces()[j], kDest);
            Polynomial value;
            if (i < k) {
                const MP d_lo = (i == j) ? s : at(j);
                if (j < k) {
                    value = case_integral(whole, fs, fd, d_lo, at(j + 1), at(i), at(i + 1));
                } else if (j > k) {
                    value = case_integral(partial, fs, fd, d_lo, at(j + 1), at(i), at(i + 1));
                } else {
                    value = case_integral(whole, fs, fd, at(j), c, at(i), at(i + 1)) +
                            case_integral(partial, fs, fd, c, at(j + 1), at(i), at(i + 1));
                }
            } else if (j == k) {
                value = case_integral(whole, fs, fd, s, c, at(k), c) +
                        case_integral(partial, fs, fd, c, at(k + 1), at(k), c);
            } else {
                value = case_integral(partial, fs, fd, at(j), at(j + 1), at(k), c);
            }
            terms.push_back({i, j, std::move(value)});
        }
    }
    return terms;
}

double full_expectation(const PiecewisePolynomial& density) {
    using MP = MultiPolynomial;
    const auto& b = density.breakpoints();
    const std::size_t n = density.pieces().size();
    const MP s = MP::variable(kStart);
    const MP d = MP::variable(kDest);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const MP fs = MP::lift(density.pieces()[i], kStart);
        for (std::size_t j = i; j < n; ++j) {
            const MP fd = MP::lift(density.pieces()[j], kDest);
            const MP d_lo = (i == j) ? s : MP::constant(b[j]);
            total += case_integral(d - s, fs, fd, d_lo, MP::constant(b[j + 1]), MP::constant(b[i]),
                                   MP::constant(b[i + 1]))
                         .coeff(0);
        }
    }
    return 2.0 * total;
}

struct PrintedForm {
    const char* name;
    Axis axis;
    bool is_density;  // otherwise the half expectation
    std::size_t branch;
    std::function<double(double, double)> eval;  // (coordinate, side)
};

// Closed forms exactly as published, including their misprints.
const std::vector<PrintedForm>& printed_forms() {
    static const std::vector<PrintedForm> forms = [] {
        const double r3 = std::numbers::sqrt3;
        std::vector<PrintedForm> f;
        f.push_back({"half_expected_lx", Axis::X, false, 0, [](double x, double a) {
                         return 2 * x * x * x / (9 * a * a) - 4 * std::pow(x, 5) / (45 * std::pow(a, 4));
                     }});
        f.push_back({"half_expected_lx", Axis::X, false, 1, [](double x, double a) {
                         return 4 * a / 135 - 7 * x / 36 + 4 * x * x / (9 * a) - 4 * x * x * x / (27 * a * a);
                     }});
        f.push_back({"half_expected_lx", Axis::X, false, 2, [](double x, double a) {
                         return (359 * std::pow(a, 5) - 1200 * std::pow(a, 4) * x + 1560 * std::pow(a, 3) * x * x -
                                 900 * a * a * std::pow(x, 3) + 240 * a * std::pow(x, 4) - 24 * std::pow(x, 5)) /
                                (270 * std::pow(a, 4));
                     }});
        f.push_back({"stationary_pdf_x", Axis::X, true, 0, [](double x, double a) {
                         return 12 * (15 * a * a * x * x - 10 * std::pow(x, 4)) / (71 * std::pow(a, 5));
                     }});
        f.push_back({"stationary_pdf_x", Axis::X, true, 1, [](double x, double a) {
                         return (-105 * a * a + 480 * a * x - 240 * x * x) / (142 * std::pow(a, 3));
                     }});
        f.push_back({"stationary_pdf_x", Axis::X, true, 2, [](double x, double a) {
                         return (-1200 * std::pow(a, 4) + 3120 * std::pow(a, 3) * x - 2700 * a * a * x * x +
                                 960 * a * std::pow(x, 3) - 120 * std::pow(x, 4)) /
                                (71 * std::pow(a, 5));
                     }});
        f.push_back({"half_expected_ly", Axis::Y, false, 0, [r3](double y, double a) {
                         return y * y * (45 * r3 * std::pow(a, 3) + 10 * a * a * y - 10 * r3 * a * y * y - 4 * std::pow(y, 3)) /
                                (405 * std::pow(a, 4));
                     }});
        f.push_back({"half_expected_ly", Axis::Y, false, 1, [r3](double y, double a) {
                         // "60^{3} a y^4" as printed.
                         return (45 * r3 * std::pow(a, 5) - 360 * std::pow(a, 4) * y + 450 * r3 * std::pow(a, 3) * y * y -
                                 460 * a * a * std::pow(y, 3) + 216000 * a * std::pow(y, 4) - 8 * std::pow(y, 5)) /
                                (810 * std::pow(a, 4));
                     }});
        f.push_back({"stationary_pdf_y", Axis::Y, true, 0, [r3](double y, double a) {
                         return 20 * y * (27 * std::pow(a, 3) + 3 * r3 * a * a * y - 12 * a * y * y - 2 * r3 * std::pow(y, 3)) /
                                (369 * std::pow(a, 5));
                     }});
        f.push_back({"stationary_pdf_y", Axis::Y, true, 1, [r3](double y, double a) {
                         return (-360 * std::pow(a, 4) + 900 * r3 * std::pow(a, 3) * y - 138 * a * a * y * y +
                                 240 * r3 * a * std::pow(y, 3) - 40 * std::pow(y, 4)) /
                                (123 * r3 * std::pow(a, 5));
                     }});
        f.push_back({"shifted_pdf_dy", Axis::Y, true, 0, [r3](double u, double a) {
                         return (540 * std::pow(a, 3) * u + 60 * r3 * a * a * u * u - 240 * a * std::pow(u, 3) -
                                 40 * r3 * std::pow(u, 4)) /
                                (369 * std::pow(a, 5));
                     }});
        return f;
    }();
    return forms;
}

}  // namespace

AxisMarginal AxisMarginal::build(Axis axis, double side) {
    require_side(side);
    AxisMarginal m;
    m.axis_ = axis;
    m.side_ = side;
    m.waypoint_pdf_ = waypoint_density(axis, side);

    const std::size_t n = m.waypoint_pdf_.pieces().size();
    std::vector<Polynomial> expectation;
    for (std::size_t k = 0; k < n; ++k) {
        auto terms = half_expectation_terms(m.waypoint_pdf_, k);
        Polynomial half;
        for (const auto& t : terms) half = half + t.half_value;
        expectation.push_back(half * 2.0);
        m.case_terms_.push_back(std::move(terms));
    }
    m.truncated_expectation_ = PiecewisePolynomial(m.waypoint_pdf_.breakpoints(), std::move(expectation));
    m.expected_leg_ = full_expectation(m.waypoint_pdf_);
    m.stationary_cdf_ = m.truncated_expectation_ * (1.0 / m.expected_leg_);
    m.stationary_pdf_ = m.stationary_cdf_.derivative();
    return m;
}

double AxisMarginal::shifted_pdf(double delta, double ref_coord) const {
    const double c = delta + ref_coord;
    if (!stationary_pdf_.contains(c)) return 0.0;
    return stationary_pdf_(c);
}

std::vector<FormCheck> AxisMarginal::validate_printed_forms(double tolerance) const {
    std::vector<FormCheck> out;
    const auto& b = waypoint_pdf_.breakpoints();
    constexpr int kProbes = 64;
    for (const auto& form : printed_forms()) {
        if (form.axis != axis_) continue;
        const Polynomial& derived = form.is_density ? stationary_pdf_.pieces()[form.branch]
                                                    : truncated_expectation_.pieces()[form.branch];
        double worst = 0.0;
        for (int p = 0; p <= kProbes; ++p) {
            const double c = b[form.branch] + (b[form.branch + 1] - b[form.branch]) * p / kProbes;
            // Printed expectations are halved.
            const double expected = form.is_density ? derived(c) : 0.5 * derived(c);
            worst = std::max(worst, std::abs(form.eval(c, side_) - expected));
        }
        const double magnitude = form.is_density ? 1.0 / side_ : side_;
        out.push_back({form.name, form.branch, worst, worst <= tolerance * std::max(1.0, magnitude)});
    }
    out.push_back({axis_ == Axis::X ? "expected_leg_x" : "expected_leg_y", 0,
                   std::abs(expected_leg_ - (axis_ == Axis::X ? 71.0 * side_ / 135.0
                                                              : 41.0 * side_ / (45.0 * std::numbers::sqrt3))),
                   true});
    out.back().matches = out.back().max_abs_diff <= tolerance * std::max(1.0, side_);
    return out;
}

const AxisMarginal& unit_marginal(Axis axis) {
    static const AxisMarginal x = AxisMarginal::build(Axis::X, 1.0);
    static const AxisMarginal y = AxisMarginal::build(Axis::Y, 1.0);
    return axis == Axis::X ? x : y;
}

namespace {

/// Validate c against [0, extent * side] and map it onto the unit marginal.
double to_unit(Axis axis, double c, double side) {
    require_side(side);
    const double extent = unit_marginal(axis).extent();
    if (!(c >= 0.0) || c > extent * side) throw std::out_of_range("coordinate outside the axis range");
    return std::min(c / side, extent);
}

}  // namespace

double waypoint_pdf_x(double s, double side) { return unit_marginal(Axis::X).waypoint_pdf()(to_unit(Axis::X, s, side)) / side; }
double waypoint_pdf_y(double s, double side) { return unit_marginal(Axis::Y).waypoint_pdf()(to_unit(Axis::Y, s, side)) / side; }

double expected_leg_x(double side) {
    require_side(side);
    return unit_marginal(Axis::X).expected_leg() * side;
}
double expected_leg_y(double side) {
    require_side(side);
    return unit_marginal(Axis::Y).expected_leg() * side;
}

double expected_lx(double x, double side) {
    return unit_marginal(Axis::X).truncated_expectation()(to_unit(Axis::X, x, side)) * side;
}
double expected_ly(double y, double side) {
    return unit_marginal(Axis::Y).truncated_expectation()(to_unit(Axis::Y, y, side)) * side;
}

double stationary_cdf_x(double x, double side) { return unit_marginal(Axis::X).stationary_cdf()(to_unit(Axis::X, x, side)); }
double stationary_cdf_y(double y, double side) { return unit_marginal(Axis::Y).stationary_cdf()(to_unit(Axis::Y, y, side)); }

double stationary_pdf_x(double x, double side) {
    return unit_marginal(Axis::X).stationary_pdf()(to_unit(Axis::X, x, side)) / side;
}
double stationary_pdf_y(double y, double side) {
    return unit_marginal(Axis::Y).stationary_pdf()(to_unit(Axis::Y, y, side)) / side;
}

double shifted_pdf_dx(double dx, double x1, double side) {
    require_side(side);
    const double x = dx + x1;
    if (!(x >= 0.0) || x > 2.0 * side) return 0.0;
    return stationary_pdf_x(x, side);
}

double shifted_pdf_dy(double dy, double y1, double side) {
    require_side(side);
    const double y = dy + y1;
    if (!(y >= 0.0) || y > std::numbers::sqrt3 * side) return 0.0;
    return stationary_pdf_y(y, side);
}

}  // namespace hexrwp
