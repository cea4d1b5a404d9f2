#pragma once
/**
 * @file polynomial.hpp
 * @brief Exact-arithmetic-style polynomial algebra in double precision.
 *
 * Polynomial is univariate in the power basis. MultiPolynomial carries three
 * variables and supports definite integration between polynomial limits,
 * which is all the symbolic machinery needed to turn the piecewise
 * waypoint densities into closed-form expected segment lengths.
 * PiecewisePolynomial glues univariate pieces over ascending breakpoints.
 */

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hexrwp {

class Polynomial {
public:
    Polynomial() = default;
    /// Ascending coefficients: c[0] + c[1] x + ...
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }
    static Polynomial identity() { return Polynomial({0.0, 1.0}); }

    /// Fused Horner; bitwise identical to the batch kernels.
    double operator()(double x) const;
    void evaluate(std::span<const double> x, std::span<double> out) const;

    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    double integrate(double lo, double hi) const;

    Polynomial operator+(const Polynomial& r) const;
    Polynomial operator-(const Polynomial& r) const;
    Polynomial operator*(const Polynomial& r) const;
    Polynomial operator*(double s) const;

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Polynomial in three variables, indexed 0..2.
class MultiPolynomial {
public:
    static constexpr std::size_t kVars = 3;
    using Exponents = std::array<unsigned, kVars>;

    MultiPolynomial() = default;
    static MultiPolynomial constant(double c);
    static MultiPolynomial variable(std::size_t var);
    /// Lift a univariate polynomial onto variable `var`.
    static MultiPolynomial lift(const Polynomial& p, std::size_t var);

    MultiPolynomial operator+(const MultiPolynomial& r) const;
    MultiPolynomial operator-(const MultiPolynomial& r) const;
    MultiPolynomial operator*(const MultiPolynomial& r) const;
    MultiPolynomial operator*(double s) const;
    MultiPolynomial& operator+=(const MultiPolynomial& r);

    /// Replace `var` by `value`, which must not itself depend on `var`.
    MultiPolynomial substitute(std::size_t var, const MultiPolynomial& value) const;

    /// Definite integral over `var` from lo to hi; the limits must not depend on `var`.
    MultiPolynomial integrate(std::size_t var, const MultiPolynomial& lo,
                              const MultiPolynomial& hi) const;

    bool depends_on(std::size_t var) const;

    /// Collapse to a univariate polynomial in `var`; throws if other variables remain.
    Polynomial to_univariate(std::size_t var) const;

    double evaluate(const std::array<double, kVars>& at) const;

private:
    MultiPolynomial pow(unsigned e) const;
    std::map<Exponents, double> terms_;
};

/// Pieces over [b0,b1), [b1,b2), ..., [b_{n-1}, b_n].
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    /// Throws std::invalid_argument unless breakpoints ascend strictly and
    /// pieces.size() == breakpoints.size() - 1.
    PiecewisePolynomial(std::vector<double> breakpoints, std::vector<Polynomial> pieces);

    double lower() const { return breakpoints_.front(); }
    double upper() const { return breakpoints_.back(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    bool contains(double x) const { return x >= lower() && x <= upper(); }

    /// Index of the piece owning x (left-closed, right-open; last piece closed).
    /// Throws std::out_of_range outside the domain.
    std::size_t piece_index(double x) const;

    /// Throws std::out_of_range outside the domain.
    double operator()(double x) const;

    /// Batch evaluation via the active kernels; out-of-domain points throw.
    void evaluate(std::span<const double> x, std::span<double> out) const;

    /// Jump |left limit - right limit| at interior breakpoint i (1..n-1).
    double jump_at(std::size_t i) const;

    PiecewisePolynomial derivative() const;
    /// Continuous antiderivative, zero at lower().
    PiecewisePolynomial cumulative() const;
    double integrate(double lo, double hi) const;
    double integral() const { return integrate(lower(), upper()); }

    PiecewisePolynomial operator*(double s) const;

private:
    std::vector<double> breakpoints_;
    std::vector<Polynomial> pieces_;
};

}  // namespace hexrwp
