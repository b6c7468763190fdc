#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/**
 * @brief The Dunkl parameter nu, restricted to rationals with nu > -1.
 *
 * Keeping nu rational keeps every identity in the symbolic layer exact;
 * the numeric module converts to double where real nu is needed.
 */
class DunklParam {
public:
    explicit DunklParam(Rational nu) : nu_(std::move(nu)) {
        if (nu_ <= Rational(-1)) {
            throw domain_error("DunklParam: nu must be > -1, got " + nu_.str());
        }
    }
    static DunklParam from_string(const std::string& s) {
        return DunklParam(Rational::from_string(s));
    }

    const Rational& value() const { return nu_; }
    std::string str() const { return nu_.str(); }
    double to_double() const { return nu_.to_double(); }

    friend bool operator==(const DunklParam& a, const DunklParam& b) { return a.nu_ == b.nu_; }
    friend auto operator<=>(const DunklParam& a, const DunklParam& b) { return a.nu_ <=> b.nu_; }

private:
    Rational nu_;
};

/**
 * @brief Memoized table of the generalized factorials gamma_{n,nu}.
 *
 * gamma_{0,nu} = 1 and the table grows by the exact ratio
 *   gamma_n / gamma_{n-1} = n            (n even)
 *                         = n + 2 nu + 1 (n odd),
 * which is the closed 2^{2k} k! (nu+1)_k form unrolled one step at a time.
 * Growth is guarded by a mutex so tables can be shared across threads.
 */
class GammaTable {
public:
    explicit GammaTable(DunklParam nu) : nu_(std::move(nu)) { values_.push_back(Rational(1)); }

    GammaTable(const GammaTable&) = delete;
    GammaTable& operator=(const GammaTable&) = delete;

    const DunklParam& nu() const { return nu_; }

    /// gamma_{n,nu}; always > 0.
    Rational operator()(std::size_t n) const {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(n);
        return values_[n];
    }

    /// gamma_{n,nu} / gamma_{n-1,nu} for n >= 1.
    Rational ratio(std::size_t n) const {
        if (n == 0) throw usage_error("GammaTable::ratio: n must be >= 1");
        if (n % 2 == 0) return Rational(static_cast<long>(n));
        return Rational(static_cast<long>(n)) + Rational(2) * nu_.value() + Rational(1);
    }

private:
    void extend(std::size_t n) const {
        while (values_.size() <= n) {
            const std::size_t k = values_.size();
            values_.push_back(values_.back() * ratio(k));
        }
    }

    DunklParam nu_;
    mutable std::vector<Rational> values_;
    mutable std::mutex mutex_;
};

/// Process-wide table registry; every module funnels its gamma lookups
/// through here so the memoization is shared.
inline GammaTable& gamma_table(const DunklParam& nu) {
    static std::map<Rational, std::unique_ptr<GammaTable>> tables;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = tables[nu.value()];
    if (!slot) slot = std::make_unique<GammaTable>(nu);
    return *slot;
}

inline Rational gamma_factorial(std::size_t n, const DunklParam& nu) {
    return gamma_table(nu)(n);
}

/// gamma_n / (gamma_k gamma_{n-k}) for 0 <= k <= n, else 0.
inline Rational dunkl_binomial(std::size_t n, long k, const DunklParam& nu) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return Rational(0);
    GammaTable& table = gamma_table(nu);
    const auto uk = static_cast<std::size_t>(k);
    return table(n) / (table(uk) * table(n - uk));
}

}  // namespace dunkl
