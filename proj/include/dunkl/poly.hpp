#pragma once

#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/series.hpp"

namespace dunkl {

/**
 * @brief Exact polynomial in x over Rational, tagged with the Dunkl parameter.
 *
 * Coefficients are stored ascending by degree with trailing zeros trimmed;
 * the zero polynomial stores nothing and reports degree kNegInfinity.
 */
class Poly {
public:
    /// Sentinel degree of the zero polynomial (stands in for -infinity).
    static constexpr int kNegInfinity = std::numeric_limits<int>::min();

    explicit Poly(DunklParam nu) : nu_(std::move(nu)) {}

    Poly(DunklParam nu, std::vector<Rational> coeffs) : nu_(std::move(nu)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(const DunklParam& nu, const Rational& c) {
        return Poly(nu, {c});
    }

    static Poly monomial(const DunklParam& nu, std::size_t degree, const Rational& c = Rational(1)) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return Poly(nu, std::move(v));
    }

    const DunklParam& nu() const { return nu_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t n) const {
        static const Rational zero(0);
        return n < coeffs_.size() ? coeffs_[n] : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Classical derivative d^r/dx^r (used by the Dirac-derivative atoms).
    Poly derivative(unsigned r = 1) const {
        Poly out = *this;
        for (unsigned step = 0; step < r; ++step) {
            if (out.coeffs_.size() <= 1) return Poly(nu_);
            std::vector<Rational> d(out.coeffs_.size() - 1);
            for (std::size_t i = 1; i < out.coeffs_.size(); ++i) {
                d[i - 1] = out.coeffs_[i] * Rational(static_cast<long>(i));
            }
            out.coeffs_ = std::move(d);
        }
        out.trim();
        return out;
    }

    /// p(-x).
    Poly reflect() const {
        Poly out = *this;
        for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
        return out;
    }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.require_same_nu(b, "add");
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(a.nu_, std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_nu(b, "multiply");
        if (a.is_zero() || b.is_zero()) return Poly(a.nu_);
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(a.nu_, std::move(v));
    }

    friend Poly operator*(const Rational& c, Poly p) {
        for (auto& x : p.coeffs_) x *= c;
        p.trim();
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nu_ == b.nu_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, highest degree first, e.g. "x^2 + 2*x + 4".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const bool unit = (a == Rational(1));
            if (i == 0) {
                os << a.str();
            } else {
                if (!unit) os << a.str() << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void require_same_nu(const Poly& other, const char* op) const {
        if (!(nu_ == other.nu_)) {
            throw usage_error(std::string("Poly: mismatched Dunkl parameters in ") + op);
        }
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    DunklParam nu_;
    std::vector<Rational> coeffs_;
};

/**
 * @brief Dunkl operator Lambda_nu applied r times.
 *
 * Uses the exact monomial rule Lambda x^n = (gamma_n/gamma_{n-1}) x^{n-1}
 * (the definitional derivative-plus-reflection form is kept as a test
 * oracle). Degree drops by exactly r, or the result is zero.
 */
inline Poly dunkl_derivative(const Poly& p, unsigned r = 1) {
    if (r == 0) throw usage_error("dunkl_derivative: r must be >= 1");
    GammaTable& table = gamma_table(p.nu());
    Poly out = p;
    for (unsigned step = 0; step < r; ++step) {
        if (out.degree() <= 0) return Poly(p.nu());
        std::vector<Rational> v(static_cast<std::size_t>(out.degree()), Rational(0));
        for (std::size_t n = 1; n < v.size() + 1; ++n) {
            if (!out.coeff(n).is_zero()) v[n - 1] = out.coeff(n) * table.ratio(n);
        }
        out = Poly(p.nu(), std::move(v));
    }
    return out;
}

/**
 * @brief Polynomial in x and y with Rational coefficients.
 *
 * Stored as the list of x-polynomials rows[j] multiplying y^j, which makes
 * both y-specialization and y-coefficient extraction first-class.
 */
class BiPoly {
public:
    BiPoly(DunklParam nu, std::vector<Poly> rows) : nu_(std::move(nu)), rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }

    const DunklParam& nu() const { return nu_; }
    std::size_t y_degree_bound() const { return rows_.size(); }

    Poly y_coefficient(std::size_t j) const {
        return j < rows_.size() ? rows_[j] : Poly(nu_);
    }

    /// Substitute y = c, producing a polynomial in x.
    Poly specialize(const Rational& c) const {
        Poly acc(nu_);
        Rational cp(1);
        for (const auto& row : rows_) {
            acc = acc + cp * row;
            cp *= c;
        }
        return acc;
    }

    /// Evaluate at rational (x, y).
    Rational evaluate(const Rational& x, const Rational& y) const {
        Rational acc(0), yp(1);
        for (const auto& row : rows_) {
            acc += yp * row.evaluate(x);
            yp *= y;
        }
        return acc;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.nu_ == b.nu_ && a.rows_ == b.rows_;
    }

private:
    DunklParam nu_;
    std::vector<Poly> rows_;
};

/**
 * @brief Dunkl translation tau_y p = sum_n Lambda^n p(x) y^n / gamma_n.
 *
 * The sum terminates at n = deg p, so the image is an exact BiPoly. On
 * monomials this reproduces the Dunkl binomial expansion, and at nu = -1/2
 * it is the classical shift p(x + y).
 */
inline BiPoly translate(const Poly& p) {
    GammaTable& table = gamma_table(p.nu());
    std::vector<Poly> rows;
    Poly q = p;
    std::size_t j = 0;
    while (true) {
        rows.push_back((Rational(1) / table(j)) * q);
        if (q.degree() <= 0) break;
        q = dunkl_derivative(q);
        ++j;
    }
    return BiPoly(p.nu(), std::move(rows));
}

/**
 * @brief The series operator L_f p = sum_{n>=1} f_n Lambda^n p, applied r times.
 *
 * f must be delta-type with nonzero t coefficient, and its order must cover
 * deg p so no term of the sum is lost to truncation.
 */
inline Poly apply_Lf(const Series& f, const Poly& p, unsigned r = 1) {
    if (r == 0) throw usage_error("apply_Lf: r must be >= 1");
    if (!(f.nu() == p.nu())) throw usage_error("apply_Lf: mismatched Dunkl parameters");
    if (!f.is_delta_type()) {
        throw domain_error("apply_Lf: f must be delta-type with nonzero t coefficient");
    }
    if (p.degree() > 0 && f.order() < static_cast<std::size_t>(p.degree())) {
        throw precision_error("apply_Lf: series order " + std::to_string(f.order()) +
                              " is below deg p = " + std::to_string(p.degree()));
    }
    Poly out = p;
    for (unsigned step = 0; step < r; ++step) {
        if (out.degree() <= 0) return Poly(p.nu());
        Poly acc(p.nu());
        Poly q = out;
        for (std::size_t n = 1; n <= static_cast<std::size_t>(out.degree()); ++n) {
            q = dunkl_derivative(q);
            if (!f.coeff(n).is_zero()) acc = acc + f.coeff(n) * q;
        }
        out = std::move(acc);
    }
    return out;
}

/**
 * @brief Discrete operator (nu+1)(tau_1 - tau_{-1}).
 *
 * Coincides with L_{G_nu}; at nu = -1/2 it is the central difference
 * (p(x+1) - p(x-1)) / 2.
 */
inline Poly discrete_difference(const Poly& p) {
    const BiPoly shifted = translate(p);
    const Rational scale = p.nu().value() + Rational(1);
    return scale * (shifted.specialize(Rational(1)) - shifted.specialize(Rational(-1)));
}

}  // namespace dunkl
