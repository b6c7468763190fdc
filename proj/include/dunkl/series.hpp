#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/**
 * @brief Truncated formal power series in t over Rational.
 *
 * A Series of order N stores the coefficients of t^0..t^N and every
 * operation is exact modulo t^{N+1}. The Dunkl parameter is carried along
 * so the kernel constructors and cross-series operations can enforce that
 * only series over the same calculus are combined.
 *
 * Two series compare equal when their coefficients agree up to the smaller
 * of the two orders.
 */
class Series {
public:
    Series(DunklParam nu, std::size_t order)
        : nu_(std::move(nu)), coeffs_(order + 1, Rational(0)) {}

    Series(DunklParam nu, std::vector<Rational> coeffs) : nu_(std::move(nu)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    }

    static Series constant(const DunklParam& nu, std::size_t order, const Rational& c) {
        Series s(nu, order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(const DunklParam& nu, std::size_t order) {
        return constant(nu, order, Rational(1));
    }

    /// The identity series t.
    static Series t(const DunklParam& nu, std::size_t order) {
        Series s(nu, order);
        if (order >= 1) s.coeffs_[1] = Rational(1);
        return s;
    }

    const DunklParam& nu() const { return nu_; }
    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& coeff(std::size_t n) const {
        static const Rational zero(0);
        return n < coeffs_.size() ? coeffs_[n] : zero;
    }
    void set_coeff(std::size_t n, Rational c) {
        if (n >= coeffs_.size()) throw usage_error("Series::set_coeff: index beyond order");
        coeffs_[n] = std::move(c);
    }

    bool is_unit_type() const { return !coeffs_[0].is_zero(); }
    bool is_delta_type() const { return coeffs_[0].is_zero() && order() >= 1 && !coeffs_[1].is_zero(); }

    Series truncated(std::size_t new_order) const {
        Series out(nu_, new_order);
        for (std::size_t n = 0; n <= new_order && n < coeffs_.size(); ++n) out.coeffs_[n] = coeffs_[n];
        return out;
    }

    Series operator-() const {
        Series out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.require_same_nu(b, "add");
        Series out(a.nu_, std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    /// Cauchy product, truncated at min(order a, order b).
    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_nu(b, "multiply");
        Series out(a.nu_, std::min(a.order(), b.order()));
        const std::size_t n = out.order();
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= n && j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend Series operator*(const Rational& c, Series s) {
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }

    /// Multiplicative inverse mod t^{N+1}; requires a unit-type series.
    Series reciprocal() const {
        if (!is_unit_type()) throw domain_error("Series::reciprocal: constant term is zero");
        Series out(nu_, order());
        out.coeffs_[0] = Rational(1) / coeffs_[0];
        for (std::size_t n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = -acc / coeffs_[0];
        }
        return out;
    }

    /**
     * Composition (*this)(inner(t)) mod t^{N+1}, N = min of the two orders.
     * The inner series must be delta-type; composing with a nonzero constant
     * term is not defined for truncated series.
     */
    Series compose(const Series& inner) const {
        require_same_nu(inner, "compose");
        if (!inner.coeff(0).is_zero()) {
            throw domain_error("Series::compose: inner series must have zero constant term");
        }
        const std::size_t n = std::min(order(), inner.order());
        const Series inner_t = inner.truncated(n);
        Series acc(nu_, n);
        for (std::size_t k = order() + 1; k-- > 0;) {
            acc = acc * inner_t;
            acc.coeffs_[0] += coeff(k);
        }
        return acc;
    }

    /**
     * Compositional inverse fbar with f(fbar(t)) = fbar(f(t)) = t mod t^{N+1},
     * computed by Lagrange inversion: fbar_n = [t^{n-1}] (t/f)^n / n.
     */
    Series reverse() const {
        if (!is_delta_type()) {
            throw domain_error("Series::reverse: series must be delta-type with nonzero t coefficient");
        }
        const std::size_t n = order();
        Series f_over_t(nu_, n == 0 ? 0 : n - 1);
        for (std::size_t k = 1; k <= n; ++k) f_over_t.coeffs_[k - 1] = coeffs_[k];
        const Series h = f_over_t.reciprocal();  // t/f as a unit series
        Series out(nu_, n);
        Series power = Series::one(nu_, h.order());
        for (std::size_t k = 1; k <= n; ++k) {
            power = power * h;
            out.coeffs_[k] = power.coeff(k - 1) / Rational(static_cast<long>(k));
        }
        return out;
    }

    /// Coefficientwise equality up to the smaller of the two orders.
    friend bool operator==(const Series& a, const Series& b) {
        if (!(a.nu_ == b.nu_)) return false;
        const std::size_t n = std::min(a.order(), b.order());
        for (std::size_t k = 0; k <= n; ++k) {
            if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
        }
        return true;
    }

private:
    void require_same_nu(const Series& other, const char* op) const {
        if (!(nu_ == other.nu_)) {
            throw usage_error(std::string("Series: mismatched Dunkl parameters in ") + op + " (" +
                              nu_.str() + " vs " + other.nu_.str() + ")");
        }
    }

    DunklParam nu_;
    std::vector<Rational> coeffs_;
};

enum class KernelKind {
    E,       ///< Dunkl exponential: coefficient 1/gamma_{n,nu} at t^n
    I,       ///< even part: 1/gamma_{2n,nu} at t^{2n}
    G,       ///< odd kernel t*IShift: 2(nu+1)/gamma_{2n+1,nu} at t^{2n+1}
    IShift,  ///< the even kernel at parameter nu+1, i.e. G(t)/t, tagged with nu
};

/**
 * Kernel series of the Dunkl calculus. E plays the role of exp, I and G of
 * cosh and sinh (E = I + G/(2(nu+1))); IShift is the even unit series G(t)/t
 * used as a generating-function building block. All four reduce to their
 * classical counterparts at nu = -1/2.
 */
inline Series dunkl_kernel_series(KernelKind kind, const DunklParam& nu, std::size_t order) {
    GammaTable& table = gamma_table(nu);
    const Rational two_nu1 = Rational(2) * (nu.value() + Rational(1));
    Series s(nu, order);
    switch (kind) {
        case KernelKind::E:
            for (std::size_t n = 0; n <= order; ++n) s.set_coeff(n, Rational(1) / table(n));
            break;
        case KernelKind::I:
            for (std::size_t n = 0; n <= order; n += 2) s.set_coeff(n, Rational(1) / table(n));
            break;
        case KernelKind::G:
            for (std::size_t n = 1; n <= order; n += 2) s.set_coeff(n, two_nu1 / table(n));
            break;
        case KernelKind::IShift:
            for (std::size_t n = 0; n <= order; n += 2) s.set_coeff(n, two_nu1 / table(n + 1));
            break;
    }
    return s;
}

}  // namespace dunkl
