#include "hexrwp/polynomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hexrwp;

TEST(Polynomial, EvaluateAndTrim) {
    const Polynomial p({1.0, -2.0, 3.0, 0.0, 0.0});
    EXPECT_EQ(p.degree(), 2u);
    EXPECT_DOUBLE_EQ(p(2.0), 1 - 4 + 12);
    EXPECT_DOUBLE_EQ(p.coeff(7), 0.0);
    EXPECT_DOUBLE_EQ(Polynomial()(3.0), 0.0);
}

TEST(Polynomial, BatchMatchesPointwiseBitwise) {
    const Polynomial p({0.3, -1.7, 2.25, 0.125, -0.5});
    std::vector<double> x, out(101);
    for (int i = 0; i <= 100; ++i) x.push_back(-2.0 + 0.04 * i);
    p.evaluate(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(out[i], p(x[i]));
}

TEST(Polynomial, Calculus) {
    const Polynomial p({1.0, 2.0, 3.0});
    const Polynomial d = p.derivative();
    EXPECT_DOUBLE_EQ(d(1.5), 2 + 6 * 1.5);
    const Polynomial a = p.antiderivative();
    EXPECT_DOUBLE_EQ(a(0.0), 0.0);
    EXPECT_NEAR(p.integrate(0, 2), 2 + 4 + 8, 1e-14);
    EXPECT_NEAR(a.derivative()(0.7), p(0.7), 1e-15);
}

TEST(Polynomial, Arithmetic) {
    const Polynomial p({1.0, 1.0});
    const Polynomial q({-1.0, 1.0});
    const Polynomial r = p * q;
    EXPECT_EQ(r.degree(), 2u);
    EXPECT_DOUBLE_EQ(r(3.0), 8.0);
    EXPECT_DOUBLE_EQ((p + q)(2.0), 4.0);
    EXPECT_DOUBLE_EQ((p - q)(2.0), 2.0);
    EXPECT_EQ((p - p).degree(), 0u);
    EXPECT_DOUBLE_EQ((p * 3.0)(1.0), 6.0);
}

TEST(MultiPolynomial, IntegrateBetweenPolynomialLimits) {
    // ∫_{s}^{x} (d - s) dd = (x - s)^2 / 2, then ∫_0^x ds gives x^3 / 6.
    const auto s = MultiPolynomial::variable(0);
    const auto d = MultiPolynomial::variable(1);
    const auto x = MultiPolynomial::variable(2);
    const auto inner = (d - s).integrate(1, s, x);
    EXPECT_FALSE(inner.depends_on(1));
    const auto outer = inner.integrate(0, MultiPolynomial::constant(0.0), x);
    const Polynomial u = outer.to_univariate(2);
    EXPECT_NEAR(u(1.2), std::pow(1.2, 3) / 6, 1e-15);
    EXPECT_NEAR(outer.evaluate({0.0, 0.0, 0.9}), std::pow(0.9, 3) / 6, 1e-15);
}

TEST(MultiPolynomial, SubstituteAndLift) {
    const auto y = MultiPolynomial::variable(1);
    const auto p = MultiPolynomial::lift(Polynomial({0.0, 0.0, 1.0}), 0);  // s^2
    const auto q = p.substitute(0, y + MultiPolynomial::constant(1.0));   // (y+1)^2
    EXPECT_DOUBLE_EQ(q.evaluate({5.0, 2.0, 0.0}), 9.0);
    EXPECT_THROW(p.substitute(0, MultiPolynomial::variable(0)), std::invalid_argument);
    EXPECT_THROW(q.to_univariate(0), std::logic_error);
}

TEST(PiecewisePolynomial, ConstructorValidates) {
    EXPECT_THROW(PiecewisePolynomial({0.0, 1.0}, {}), std::invalid_argument);
    EXPECT_THROW(PiecewisePolynomial({0.0, 0.0}, {Polynomial({1.0})}), std::invalid_argument);
    EXPECT_THROW(PiecewisePolynomial({1.0, 0.0}, {Polynomial({1.0})}), std::invalid_argument);
    EXPECT_THROW(PiecewisePolynomial({0.0}, {}), std::invalid_argument);
}

TEST(PiecewisePolynomial, BreakpointMembership) {
    const PiecewisePolynomial pw({0.0, 1.0, 2.0}, {Polynomial({1.0}), Polynomial({2.0})});
    EXPECT_EQ(pw.piece_index(0.0), 0u);
    EXPECT_EQ(pw.piece_index(0.999), 0u);
    EXPECT_EQ(pw.piece_index(1.0), 1u);  // left-closed
    EXPECT_EQ(pw.piece_index(2.0), 1u);  // last piece closed
    EXPECT_THROW(pw.piece_index(-1e-12), std::out_of_range);
    EXPECT_THROW(pw(2.0 + 1e-12), std::out_of_range);
    EXPECT_DOUBLE_EQ(pw.jump_at(1), 1.0);
}

TEST(PiecewisePolynomial, CumulativeIsContinuous) {
    const PiecewisePolynomial pw({0.0, 0.5, 1.5, 2.0},
                                 {Polynomial({0.0, 2.0}), Polynomial({1.0}), Polynomial({4.0, -2.0})});
    const auto c = pw.cumulative();
    EXPECT_DOUBLE_EQ(c(0.0), 0.0);
    EXPECT_NEAR(c.jump_at(1), 0.0, 1e-15);
    EXPECT_NEAR(c.jump_at(2), 0.0, 1e-15);
    EXPECT_NEAR(c(2.0), pw.integral(), 1e-15);
    EXPECT_NEAR(pw.integral(), 0.25 + 1.0 + 0.25, 1e-15);
    EXPECT_NEAR(pw.integrate(0.25, 1.75), pw.integral() - 2 * 0.0625, 1e-15);
    EXPECT_NEAR(c.derivative()(1.0), pw(1.0), 1e-15);
    EXPECT_NEAR((pw * 2.0).integral(), 3.0, 1e-15);
}

TEST(PiecewisePolynomial, BatchMatchesPointwise) {
    const PiecewisePolynomial pw({0.0, 0.5, 1.5, 2.0},
                                 {Polynomial({0.0, 2.0, 1.0}), Polynomial({1.0, 0.1}), Polynomial({4.0, -2.0})});
    std::vector<double> x, out(203);
    for (int i = 0; i < 203; ++i) x.push_back(2.0 * ((i * 37) % 203) / 202.0);
    pw.evaluate(x, out);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(out[i], pw(x[i]));
    std::vector<double> bad{0.5, 3.0};
    std::vector<double> o2(2);
    EXPECT_THROW(pw.evaluate(bad, o2), std::out_of_range);
}
