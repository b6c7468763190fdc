#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/series.hpp"
#include "dunkl/sheffer.hpp"

namespace dunkl {

/// One point mass or Dirac-derivative atom: weight * delta^{(order)}_{location}.
struct DiracAtom {
    Rational location;
    unsigned derivative_order = 0;
    Rational weight;
};

/**
 * @brief Linear functional on polynomials given by a (possibly
 * distributional) measure.
 *
 * Three variants:
 *  - Atomic: point masses and Dirac-derivative atoms; acting on p gives
 *    sum w * (-1)^m p^{(m)}(x0). The (-1)^m sign is the convention under
 *    which both the delta' and the delta'' verification tables of the
 *    truncated families come out right.
 *  - MomentSeq: an abstract moment sequence omega; acting on sum c_k x^k
 *    gives sum c_k omega_k.
 *  - NamedDensity: a continuous density known by name. Only the Bernoulli
 *    weight (nu+1)|x|^{2nu+1} on (-1,1) has closed-form moments and acts
 *    exactly; the Bessel-K densities are numeric-only and refuse exact use.
 */
class MomentFunctional {
public:
    struct Atomic {
        std::vector<DiracAtom> atoms;
    };
    struct MomentSeq {
        std::vector<Rational> omega;
    };
    enum class DensityId { bernoulli_weight, besselK_signed, besselK_even };
    struct NamedDensity {
        DensityId id;
        DunklParam nu;
    };

    static MomentFunctional atomic(std::vector<DiracAtom> atoms) {
        return MomentFunctional(Atomic{std::move(atoms)});
    }
    static MomentFunctional moment_sequence(std::vector<Rational> omega) {
        return MomentFunctional(MomentSeq{std::move(omega)});
    }
    static MomentFunctional named_density(DensityId id, const DunklParam& nu) {
        return MomentFunctional(NamedDensity{id, nu});
    }

    /// Convenience: the Dirac delta at the origin.
    static MomentFunctional delta0() { return atomic({DiracAtom{Rational(0), 0, Rational(1)}}); }

    const std::variant<Atomic, MomentSeq, NamedDensity>& variant() const { return v_; }

    /// Exact action on a polynomial.
    Rational apply(const Poly& p) const {
        if (const auto* a = std::get_if<Atomic>(&v_)) {
            Rational acc(0);
            for (const auto& atom : a->atoms) {
                const Poly d = atom.derivative_order == 0 ? p : p.derivative(atom.derivative_order);
                Rational term = atom.weight * d.evaluate(atom.location);
                if (atom.derivative_order % 2 == 1) term = -term;
                acc += term;
            }
            return acc;
        }
        if (const auto* m = std::get_if<MomentSeq>(&v_)) {
            Rational acc(0);
            for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
                if (p.coeffs()[k].is_zero()) continue;
                if (k >= m->omega.size()) {
                    throw usage_error("MomentFunctional: moment sequence too short for degree " +
                                      std::to_string(p.degree()));
                }
                acc += p.coeffs()[k] * m->omega[k];
            }
            return acc;
        }
        const auto& d = std::get<NamedDensity>(v_);
        if (d.id == DensityId::bernoulli_weight) {
            Rational acc(0);
            for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
                acc += p.coeffs()[k] * bernoulli_weight_moment_impl(k, d.nu);
            }
            return acc;
        }
        throw unsupported_exact_error(
            "MomentFunctional: this density has no closed-form moments; use the numeric module");
    }

    /// Exact n-th moment (action on x^n), when the variant supports it.
    Rational moment(std::size_t n, const DunklParam& nu) const {
        return apply(Poly::monomial(nu, n));
    }

private:
    explicit MomentFunctional(std::variant<Atomic, MomentSeq, NamedDensity> v) : v_(std::move(v)) {}

    static Rational bernoulli_weight_moment_impl(std::size_t k, const DunklParam& nu);

    std::variant<Atomic, MomentSeq, NamedDensity> v_;
};

/**
 * Exact monomial moments of the weight (nu+1)|x|^{2nu+1} on (-1,1):
 * zero for odd k, (nu+1)/(nu+m+1) for k = 2m.
 */
inline Rational bernoulli_weight_moment(std::size_t k, const DunklParam& nu) {
    if (k % 2 == 1) return Rational(0);
    const Rational m(static_cast<long>(k / 2));
    return (nu.value() + Rational(1)) / (nu.value() + m + Rational(1));
}

inline Rational MomentFunctional::bernoulli_weight_moment_impl(std::size_t k, const DunklParam& nu) {
    return bernoulli_weight_moment(k, nu);
}

struct ThornePair {
    std::size_t n = 0;
    std::size_t r = 0;
    Rational value;
    Rational expected;
    bool pass = false;
};

struct ThorneReport {
    std::vector<ThornePair> pairs;
    bool all_pass = true;
};

/**
 * @brief Check the biorthogonality table functional(L_f^r s_n) = gamma_n delta_{n,r}.
 *
 * Runs every 0 <= r <= n < seq.size() in deterministic (n, r) order and
 * reports each exact value against its target.
 */
inline ThorneReport thorne_verify(const MomentFunctional& functional, const PolySequence& seq) {
    GammaTable& table = gamma_table(seq.nu());
    ThorneReport report;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        Poly q = seq[n];
        for (std::size_t r = 0; r <= n; ++r) {
            if (r > 0) q = apply_Lf(seq.spec().f, q);
            ThornePair pair;
            pair.n = n;
            pair.r = r;
            pair.value = functional.apply(q);
            pair.expected = (n == r) ? table(n) : Rational(0);
            pair.pass = (pair.value == pair.expected);
            report.all_pass = report.all_pass && pair.pass;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

/**
 * @brief Sheffer-side reconstruction s_n(x) = sum_j omega_j [y^j] tau_y(p_n)(x).
 *
 * The associated sequence must come from a pair with g = 1; omega are the
 * moments of the measure whose generating series is 1/g. This is an exact
 * polynomial identity, no quadrature involved.
 */
inline PolySequence sheffer_reconstruct(const std::vector<Rational>& omega, const PolySequence& assoc) {
    const DunklParam& nu = assoc.nu();
    if (!(assoc.spec().g == Series::one(nu, assoc.spec().g.order()))) {
        throw usage_error("sheffer_reconstruct: associated sequence must be generated with g = 1");
    }
    if (omega.empty() || omega[0].is_zero()) {
        throw domain_error("sheffer_reconstruct: omega_0 must be nonzero");
    }
    if (omega.size() < assoc.size()) {
        throw usage_error("sheffer_reconstruct: need omega_0..omega_" + std::to_string(assoc.size() - 1));
    }

    std::vector<Poly> polys;
    polys.reserve(assoc.size());
    for (std::size_t n = 0; n < assoc.size(); ++n) {
        const BiPoly shifted = translate(assoc[n]);
        Poly s(nu);
        for (std::size_t j = 0; j < shifted.y_degree_bound(); ++j) {
            if (j >= omega.size()) break;
            s = s + omega[j] * shifted.y_coefficient(j);
        }
        polys.push_back(std::move(s));
    }

    // The reconstructed pair: 1/g is the series with coefficients omega_n / gamma_n.
    GammaTable& table = gamma_table(nu);
    const std::size_t order = assoc.size() - 1;
    Series ginv(nu, order);
    for (std::size_t n = 0; n <= order; ++n) ginv.set_coeff(n, omega[n] / table(n));
    FamilySpec spec(ginv.reciprocal(), assoc.spec().f.truncated(order), "sheffer");
    return PolySequence(std::move(spec), std::move(polys));
}

/// Real/imaginary split of a series with Gaussian-rational coefficients.
struct ComplexSeries {
    Series real;
    Series imag;
};

/**
 * @brief The auxiliary transform (scaled): returns 2*pi*F(t) for
 * F(t) = sum i^n mu_n t^n / (2 pi n!).
 *
 * The irrational 1/(2 pi) factor is kept symbolic so the result stays exact;
 * callers pattern-match the scaled series against closed forms.
 */
inline ComplexSeries auxiliary_F(const std::vector<Rational>& mu, const DunklParam& nu, std::size_t order) {
    Series re(nu, order), im(nu, order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational m = n < mu.size() ? mu[n] : Rational(0);
        if (m.is_zero()) continue;
        const Rational c = m / Rational::factorial(n);
        switch (n % 4) {
            case 0: re.set_coeff(n, c); break;
            case 1: im.set_coeff(n, c); break;
            case 2: re.set_coeff(n, -c); break;
            case 3: im.set_coeff(n, -c); break;
        }
    }
    return ComplexSeries{std::move(re), std::move(im)};
}

enum class ReconstructDirection { g_from_mu, ginv_from_omega };

/**
 * @brief Series with coefficients moments[n] / gamma_n.
 *
 * With mu-moments this rebuilds g; with omega-moments it rebuilds 1/g.
 * The direction only labels the caller's intent; the coefficient map is the
 * same both ways and callers compare against a known g or its reciprocal.
 */
inline Series reconstruct_generating(ReconstructDirection, const std::vector<Rational>& moments,
                                     const DunklParam& nu, std::size_t order) {
    GammaTable& table = gamma_table(nu);
    Series out(nu, order);
    for (std::size_t n = 0; n <= order && n < moments.size(); ++n) {
        out.set_coeff(n, moments[n] / table(n));
    }
    return out;
}

}  // namespace dunkl
