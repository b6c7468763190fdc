#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "dunkl/gamma.hpp"

using dunkl::DunklParam;
using dunkl::dunkl_binomial;
using dunkl::gamma_factorial;
using dunkl::Rational;

namespace {

// Independent oracle: the closed form 2^{2k} k! (nu+1)_k (even n = 2k) and
// 2^{2k+1} k! (nu+1)_{k+1} (odd n = 2k+1), expanded term by term.
Rational gamma_bruteforce(std::size_t n, const Rational& nu) {
    const std::size_t k = n / 2;
    const std::size_t poch_terms = (n % 2 == 0) ? k : k + 1;
    Rational poch(1);
    for (std::size_t i = 0; i < poch_terms; ++i) {
        poch *= nu + Rational(1) + Rational(static_cast<long>(i));
    }
    const std::size_t two_exp = (n % 2 == 0) ? 2 * k : 2 * k + 1;
    return Rational(2).pow(two_exp) * Rational::factorial(k) * poch;
}

const std::vector<Rational> kTestNus = {Rational(-1, 2), Rational(0), Rational(1, 4), Rational(3, 2),
                                        Rational(-3, 4)};

}  // namespace

TEST_CASE("nu must exceed -1", "[gamma]") {
    CHECK_THROWS_AS(DunklParam(Rational(-1)), dunkl::domain_error);
    CHECK_THROWS_AS(DunklParam(Rational(-2)), dunkl::domain_error);
    CHECK_NOTHROW(DunklParam(Rational(-1, 2)));
    CHECK_NOTHROW(DunklParam(Rational(-99, 100)));
    CHECK(DunklParam::from_string("1/4").value() == Rational(1, 4));
}

TEST_CASE("gamma_factorial spot values", "[gamma]") {
    CHECK(gamma_factorial(5, DunklParam(Rational(-1, 2))) == Rational(120));
    CHECK(gamma_factorial(0, DunklParam(Rational(1, 4))) == Rational(1));
    CHECK(gamma_factorial(0, DunklParam(Rational(3, 2))) == Rational(1));
    CHECK(gamma_factorial(3, DunklParam(Rational(0))) == Rational(16));
}

TEST_CASE("gamma reduces to n! at nu = -1/2", "[gamma]") {
    const DunklParam nu(Rational(-1, 2));
    for (std::size_t n = 0; n <= 30; ++n) {
        CHECK(gamma_factorial(n, nu) == Rational::factorial(n));
    }
}

TEST_CASE("gamma matches the brute-force closed form", "[gamma]") {
    for (const auto& nur : kTestNus) {
        const DunklParam nu(nur);
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(gamma_factorial(n, nu) == gamma_bruteforce(n, nur));
        }
    }
}

TEST_CASE("consecutive ratio is n or n + 2nu + 1", "[gamma]") {
    for (const auto& nur : kTestNus) {
        const DunklParam nu(nur);
        for (std::size_t n = 1; n <= 20; ++n) {
            const Rational ratio = gamma_factorial(n, nu) / gamma_factorial(n - 1, nu);
            if (n % 2 == 0) {
                CHECK(ratio == Rational(static_cast<long>(n)));
            } else {
                CHECK(ratio == Rational(static_cast<long>(n)) + Rational(2) * nur + Rational(1));
            }
            CHECK(ratio.sign() > 0);
        }
    }
}

TEST_CASE("dunkl_binomial spot values and bounds", "[gamma]") {
    const DunklParam half(Rational(-1, 2)), zero(Rational(0)), q(Rational(1, 4));
    CHECK(dunkl_binomial(7, 0, q) == Rational(1));
    CHECK(dunkl_binomial(7, 7, q) == Rational(1));
    CHECK(dunkl_binomial(4, 2, half) == Rational(6));
    CHECK(dunkl_binomial(2, 1, zero) == Rational(1));
    CHECK(dunkl_binomial(3, -1, q) == Rational(0));
    CHECK(dunkl_binomial(3, 4, q) == Rational(0));
}

TEST_CASE("dunkl_binomial symmetry", "[gamma]") {
    for (const auto& nur : kTestNus) {
        const DunklParam nu(nur);
        for (std::size_t n = 0; n <= 12; ++n) {
            for (long k = 0; k <= static_cast<long>(n); ++k) {
                CHECK(dunkl_binomial(n, k, nu) == dunkl_binomial(n, static_cast<long>(n) - k, nu));
            }
        }
    }
}

TEST_CASE("binomials reduce to Pascal at nu = -1/2", "[gamma]") {
    const DunklParam nu(Rational(-1, 2));
    for (std::size_t n = 1; n <= 10; ++n) {
        for (long k = 1; k <= static_cast<long>(n) - 1; ++k) {
            CHECK(dunkl_binomial(n, k, nu) ==
                  dunkl_binomial(n - 1, k - 1, nu) + dunkl_binomial(n - 1, k, nu));
        }
    }
}

TEST_CASE("memo table is safe under concurrent use", "[gamma]") {
    const DunklParam nu(Rational(5, 7));
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] { results[t] = gamma_factorial(60 + t, nu); });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
        CHECK(results[t] == gamma_factorial(60 + t, nu));
    }
}
