#include "hexrwp/polynomial.hpp"

#include "hexrwp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexrwp {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
    if (coeffs_.empty()) return 0.0;
    double r = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) r = std::fma(r, x, coeffs_[k]);
    return r;
}

void Polynomial::evaluate(std::span<const double> x, std::span<double> out) const {
    kernels::horner(coeffs_, x, out);
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<double> c(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> c(coeffs_.size() + 1, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(c));
}

double Polynomial::integrate(double lo, double hi) const {
    const Polynomial a = antiderivative();
    return a(hi) - a(lo);
}

Polynomial Polynomial::operator+(const Polynomial& r) const {
    std::vector<double> c(std::max(coeffs_.size(), r.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + r.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& r) const { return *this + r * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& r) const {
    if (coeffs_.empty() || r.coeffs_.empty()) return {};
    std::vector<double> c(coeffs_.size() + r.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * r.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// MultiPolynomial

MultiPolynomial MultiPolynomial::constant(double c) {
    MultiPolynomial p;
    if (c != 0.0) p.terms_[{0, 0, 0}] = c;
    return p;
}

MultiPolynomial MultiPolynomial::variable(std::size_t var) {
    MultiPolynomial p;
    Exponents e{0, 0, 0};
    e.at(var) = 1;
    p.terms_[e] = 1.0;
    return p;
}

MultiPolynomial MultiPolynomial::lift(const Polynomial& poly, std::size_t var) {
    MultiPolynomial p;
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
        if (poly.coeffs()[k] == 0.0) continue;
        Exponents e{0, 0, 0};
        e.at(var) = static_cast<unsigned>(k);
        p.terms_[e] = poly.coeffs()[k];
    }
    return p;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& r) {
    for (const auto& [e, c] : r.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPolynomial MultiPolynomial::operator+(const MultiPolynomial& r) const {
    MultiPolynomial out = *this;
    out += r;
    return out;
}

MultiPolynomial MultiPolynomial::operator-(const MultiPolynomial& r) const { return *this + r * -1.0; }

MultiPolynomial MultiPolynomial::operator*(double s) const {
    MultiPolynomial out;
    if (s == 0.0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

MultiPolynomial MultiPolynomial::operator*(const MultiPolynomial& r) const {
    MultiPolynomial out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : r.terms_) {
            Exponents e{};
            for (std::size_t v = 0; v < kVars; ++v) e[v] = e1[v] + e2[v];
            MultiPolynomial t;
            t.terms_[e] = c1 * c2;
            out += t;
        }
    }
    return out;
}

MultiPolynomial MultiPolynomial::pow(unsigned e) const {
    MultiPolynomial out = constant(1.0);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool MultiPolynomial::depends_on(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first.at(var) != 0; });
}

MultiPolynomial MultiPolynomial::substitute(std::size_t var, const MultiPolynomial& value) const {
    if (value.depends_on(var)) {
        throw std::invalid_argument("MultiPolynomial::substitute: value depends on the variable");
    }
    std::vector<MultiPolynomial> powers{constant(1.0)};
    MultiPolynomial out;
    for (const auto& [e, c] : terms_) {
        const unsigned k = e.at(var);
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest.at(var) = 0;
        MultiPolynomial mono;
        mono.terms_[rest] = c;
        out += mono * powers[k];
    }
    return out;
}

MultiPolynomial MultiPolynomial::integrate(std::size_t var, const MultiPolynomial& lo,
                                           const MultiPolynomial& hi) const {
    MultiPolynomial anti;
    for (const auto& [e, c] : terms_) {
        Exponents up = e;
        up.at(var) += 1;
        anti.terms_[up] = c / static_cast<double>(up.at(var));
    }
    return anti.substitute(var, hi) - anti.substitute(var, lo);
}

Polynomial MultiPolynomial::to_univariate(std::size_t var) const {
    std::vector<double> c;
    for (const auto& [e, coeff] : terms_) {
        for (std::size_t v = 0; v < kVars; ++v) {
            if (v != var && e[v] != 0) {
                throw std::logic_error("MultiPolynomial::to_univariate: other variables remain");
            }
        }
        const unsigned k = e.at(var);
        if (c.size() <= k) c.resize(k + 1, 0.0);
        c[k] += coeff;
    }
    return Polynomial(std::move(c));
}

double MultiPolynomial::evaluate(const std::array<double, kVars>& at) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c;
        for (std::size_t v = 0; v < kVars; ++v) term *= std::pow(at[v], static_cast<int>(e[v]));
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// PiecewisePolynomial

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
        throw std::invalid_argument("PiecewisePolynomial: need n+1 breakpoints for n pieces");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > breakpoints_[i - 1])) {
            throw std::invalid_argument("PiecewisePolynomial: breakpoints must ascend strictly");
        }
    }
}

std::size_t PiecewisePolynomial::piece_index(double x) const {
    if (!contains(x)) throw std::out_of_range("PiecewisePolynomial: argument outside domain");
    // First breakpoint strictly greater than x closes the owning piece.
    const auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
    return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

double PiecewisePolynomial::operator()(double x) const { return pieces_[piece_index(x)](x); }

void PiecewisePolynomial::evaluate(std::span<const double> x, std::span<double> out) const {
    if (x.size() != out.size()) throw std::invalid_argument("PiecewisePolynomial::evaluate: size mismatch");
    if (pieces_.size() == 1) {
        for (double v : x) (void)piece_index(v);
        pieces_.front().evaluate(x, out);
        return;
    }
    std::vector<std::size_t> owner(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) owner[i] = piece_index(x[i]);
    std::vector<double> gathered;
    std::vector<double> values;
    std::vector<std::size_t> slots;
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
        gathered.clear();
        slots.clear();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (owner[i] == p) {
                gathered.push_back(x[i]);
                slots.push_back(i);
            }
        }
        if (slots.empty()) continue;
        values.resize(gathered.size());
        pieces_[p].evaluate(gathered, values);
        for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = values[k];
    }
}

double PiecewisePolynomial::jump_at(std::size_t i) const {
    if (i == 0 || i + 1 >= breakpoints_.size()) throw std::out_of_range("jump_at: not an interior breakpoint");
    const double b = breakpoints_[i];
    return std::abs(pieces_[i - 1](b) - pieces_[i](b));
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Polynomial> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return {breakpoints_, std::move(d)};
}

PiecewisePolynomial PiecewisePolynomial::cumulative() const {
    std::vector<Polynomial> c;
    c.reserve(pieces_.size());
    double carry = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Polynomial a = pieces_[i].antiderivative();
        const Polynomial shifted = a + Polynomial::constant(carry - a(breakpoints_[i]));
        carry = shifted(breakpoints_[i + 1]);
        c.push_back(shifted);
    }
    return {breakpoints_, std::move(c)};
}

double PiecewisePolynomial::integrate(double lo, double hi) const {
    if (hi < lo) return -integrate(hi, lo);
    lo = std::max(lo, lower());
    hi = std::min(hi, upper());
    double sum = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const double a = std::max(lo, breakpoints_[i]);
        const double b = std::min(hi, breakpoints_[i + 1]);
        if (b > a) sum += pieces_[i].integrate(a, b);
    }
    return sum;
}

PiecewisePolynomial PiecewisePolynomial::operator*(double s) const {
    std::vector<Polynomial> p;
    p.reserve(pieces_.size());
    for (const auto& q : pieces_) p.push_back(q * s);
    return {breakpoints_, std::move(p)};
}

}  // namespace hexrwp
