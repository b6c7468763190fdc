#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/series.hpp"

namespace dunkl {

/**
 * @brief Defining pair (g, f) of a Sheffer-Dunkl family.
 *
 * g must be unit-type (b_0 != 0) and f delta-type (a_1 != 0); both carry the
 * same Dunkl parameter. The family generated from the pair satisfies
 * L_f s_n = (gamma_n / gamma_{n-1}) s_{n-1}.
 */
struct FamilySpec {
    Series g;
    Series f;
    std::string name;

    FamilySpec(Series g_in, Series f_in, std::string name_in = "")
        : g(std::move(g_in)), f(std::move(f_in)), name(std::move(name_in)) {
        if (!(g.nu() == f.nu())) throw usage_error("FamilySpec: g and f carry different Dunkl parameters");
        if (!g.is_unit_type()) throw domain_error("FamilySpec: g must have nonzero constant term");
        if (!f.is_delta_type()) throw domain_error("FamilySpec: f must be delta-type with nonzero t coefficient");
    }

    const DunklParam& nu() const { return g.nu(); }
};

/// A generated family s_0..s_N together with its defining pair.
class PolySequence {
public:
    PolySequence(FamilySpec spec, std::vector<Poly> polys)
        : spec_(std::move(spec)), polys_(std::move(polys)) {}

    const FamilySpec& spec() const { return spec_; }
    const DunklParam& nu() const { return spec_.nu(); }
    std::size_t size() const { return polys_.size(); }
    const Poly& operator[](std::size_t n) const { return polys_.at(n); }
    auto begin() const { return polys_.begin(); }
    auto end() const { return polys_.end(); }

private:
    FamilySpec spec_;
    std::vector<Poly> polys_;
};

/**
 * @brief Expand 1/g(fbar(t)) E_nu(x fbar(t)) into s_0..s_count.
 *
 * s_n(x) = gamma_n * sum_m [t^n](H * fbar^m) / gamma_m * x^m with
 * H = 1/(g o fbar); the powers of fbar are built incrementally. Requires
 * both series orders >= count, otherwise the truncation would silently
 * corrupt the top polynomials.
 */
inline PolySequence generate_sequence(const FamilySpec& spec, std::size_t count) {
    if (spec.g.order() < count || spec.f.order() < count) {
        throw precision_error("generate_sequence: series order too small for " +
                              std::to_string(count) + " polynomials");
    }
    const DunklParam& nu = spec.nu();
    GammaTable& table = gamma_table(nu);

    const Series fbar = spec.f.truncated(count).reverse();
    const Series h = spec.g.truncated(count).compose(fbar).reciprocal();

    // cols[m] = H * fbar^m; only coefficients n >= m are ever read.
    std::vector<Series> cols;
    cols.reserve(count + 1);
    Series power = Series::one(nu, count);
    for (std::size_t m = 0; m <= count; ++m) {
        cols.push_back(h * power);
        if (m < count) power = power * fbar;
    }

    std::vector<Poly> polys;
    polys.reserve(count + 1);
    for (std::size_t n = 0; n <= count; ++n) {
        std::vector<Rational> c(n + 1, Rational(0));
        for (std::size_t m = 0; m <= n; ++m) {
            c[m] = table(n) * cols[m].coeff(n) / table(m);
        }
        polys.emplace_back(nu, std::move(c));
    }
    return PolySequence(spec, std::move(polys));
}

enum class FamilyName {
    truncated,
    truncated_t2,
    bernoulli,
    euler,
    appell_discrete_truncated,
    factorial,
    bernoulli_2nd,
    boole,
};

inline const std::vector<std::pair<FamilyName, std::string>>& family_names() {
    static const std::vector<std::pair<FamilyName, std::string>> names = {
        {FamilyName::truncated, "truncated"},
        {FamilyName::truncated_t2, "truncated_t2"},
        {FamilyName::bernoulli, "bernoulli"},
        {FamilyName::euler, "euler"},
        {FamilyName::appell_discrete_truncated, "appell_discrete_truncated"},
        {FamilyName::factorial, "factorial"},
        {FamilyName::bernoulli_2nd, "bernoulli_2nd"},
        {FamilyName::boole, "boole"},
    };
    return names;
}

inline std::string to_string(FamilyName name) {
    for (const auto& [value, text] : family_names()) {
        if (value == name) return text;
    }
    throw usage_error("unknown family");
}

inline FamilyName family_from_string(const std::string& text) {
    for (const auto& [value, name] : family_names()) {
        if (name == text) return value;
    }
    throw usage_error("unknown family '" + text + "'");
}

/**
 * @brief The (g, f) pairs of the named families.
 *
 *   truncated                  (1 - t,        t)
 *   truncated_t2               (1 - t^2,      t)
 *   bernoulli                  (IShift,       t)
 *   euler                      (I,            t)
 *   factorial                  (1,            G)
 *   appell_discrete_truncated  (1 - t,        G)
 *   bernoulli_2nd              (t/G(t),       G)   -- the even unit series 1/IShift
 *   boole                      (I,            G)
 *
 * The discrete families set f = G so that fbar = Gbar in the generating
 * expansion.
 */
inline FamilySpec preset_family(FamilyName name, const DunklParam& nu, std::size_t order) {
    const Series one = Series::one(nu, order);
    const Series t = Series::t(nu, order);
    switch (name) {
        case FamilyName::truncated:
            return FamilySpec(one - t, t, "truncated");
        case FamilyName::truncated_t2:
            return FamilySpec(one - t * t, t, "truncated_t2");
        case FamilyName::bernoulli:
            return FamilySpec(dunkl_kernel_series(KernelKind::IShift, nu, order), t, "bernoulli");
        case FamilyName::euler:
            return FamilySpec(dunkl_kernel_series(KernelKind::I, nu, order), t, "euler");
        case FamilyName::factorial:
            return FamilySpec(one, dunkl_kernel_series(KernelKind::G, nu, order), "factorial");
        case FamilyName::appell_discrete_truncated:
            return FamilySpec(one - t, dunkl_kernel_series(KernelKind::G, nu, order),
                              "appell_discrete_truncated");
        case FamilyName::bernoulli_2nd:
            return FamilySpec(dunkl_kernel_series(KernelKind::IShift, nu, order).reciprocal(),
                              dunkl_kernel_series(KernelKind::G, nu, order), "bernoulli_2nd");
        case FamilyName::boole:
            return FamilySpec(dunkl_kernel_series(KernelKind::I, nu, order),
                              dunkl_kernel_series(KernelKind::G, nu, order), "boole");
    }
    throw usage_error("unknown family");
}

inline FamilySpec preset_family(const std::string& name, const DunklParam& nu, std::size_t order) {
    return preset_family(family_from_string(name), nu, order);
}

/// Associated family of the same f: the pair (1, f).
inline FamilySpec associated_family(const FamilySpec& spec) {
    return FamilySpec(Series::one(spec.nu(), spec.g.order()), spec.f,
                      spec.name.empty() ? "associated" : "associated_" + spec.name);
}

/// The moment sequence gamma_n [t^n] g carried by a generating series.
inline std::vector<Rational> moments_of_series(const Series& g, std::size_t count) {
    if (g.order() < count) throw precision_error("moments_of_series: series order too small");
    GammaTable& table = gamma_table(g.nu());
    std::vector<Rational> mu(count + 1);
    for (std::size_t n = 0; n <= count; ++n) mu[n] = table(n) * g.coeff(n);
    return mu;
}

/**
 * @brief Reconstruct a family from its Thorne moment data.
 *
 * For each n, solves for s_n = c_0 + ... + c_n x^n such that the functional
 * with moments mu satisfies functional(L_f^r s_n) = gamma_n delta_{n,r} for
 * r = 0..n. Since L_f^r annihilates degrees below r, the system is
 * triangular in c_n, ..., c_0 and has a unique solution exactly when
 * mu[0] != 0.
 */
inline PolySequence sequence_from_thorne(const Series& f, const std::vector<Rational>& mu,
                                         const DunklParam& nu, std::size_t count) {
    if (!(f.nu() == nu)) throw usage_error("sequence_from_thorne: f carries a different Dunkl parameter");
    if (!f.is_delta_type()) throw domain_error("sequence_from_thorne: f must be delta-type");
    if (mu.empty() || mu[0].is_zero()) {
        throw domain_error("sequence_from_thorne: moment mu_0 must be nonzero (singular system)");
    }
    if (mu.size() < count + 1) {
        throw usage_error("sequence_from_thorne: need moments mu_0..mu_" + std::to_string(count));
    }
    if (f.order() < count) throw precision_error("sequence_from_thorne: series order too small");

    GammaTable& table = gamma_table(nu);
    const auto functional = [&](const Poly& p) {
        Rational acc(0);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] * mu[k];
        return acc;
    };

    // value[r][k] = functional(L_f^r x^k), for k >= r (zero below the diagonal).
    std::vector<std::vector<Rational>> value(count + 1, std::vector<Rational>(count + 1, Rational(0)));
    for (std::size_t k = 0; k <= count; ++k) {
        Poly q = Poly::monomial(nu, k);
        value[0][k] = functional(q);
        for (std::size_t r = 1; r <= k; ++r) {
            q = apply_Lf(f, q);
            value[r][k] = functional(q);
        }
    }

    std::vector<Poly> polys;
    polys.reserve(count + 1);
    for (std::size_t n = 0; n <= count; ++n) {
        std::vector<Rational> c(n + 1, Rational(0));
        for (std::size_t r = n + 1; r-- > 0;) {
            Rational rhs = (r == n) ? table(n) : Rational(0);
            for (std::size_t k = r + 1; k <= n; ++k) rhs -= c[k] * value[r][k];
            c[r] = rhs / value[r][r];
        }
        polys.emplace_back(nu, std::move(c));
    }

    // The pair this data determines: g has coefficients mu_n / gamma_n.
    Series g(nu, count);
    for (std::size_t n = 0; n <= count; ++n) g.set_coeff(n, mu[n] / table(n));
    return PolySequence(FamilySpec(std::move(g), f.truncated(count), "thorne"), std::move(polys));
}

}  // namespace dunkl
