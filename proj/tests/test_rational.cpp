#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dunkl/rational.hpp"

using dunkl::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("construction is canonical", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));  // denominator sign normalized
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), dunkl::domain_error);
}

TEST_CASE("string form is p/q, p when integral", "[rational]") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));  // parsed values reduce too
    CHECK_THROWS_AS(Rational::from_string(""), dunkl::usage_error);
    CHECK_THROWS_AS(Rational::from_string("a/b"), dunkl::usage_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), dunkl::domain_error);
}

TEST_CASE("string round trip on random values", "[rational]") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const Rational r = random_rational(rng);
        CHECK(Rational::from_string(r.str()) == r);
    }
}

TEST_CASE("field axioms hold exactly", "[rational]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("division by zero is an error", "[rational]") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), dunkl::domain_error);
}

TEST_CASE("ordering", "[rational]") {
    CHECK(Rational(-1, 2) < Rational(-1, 4));
    CHECK(Rational(-1, 4) < Rational(0));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(1, 3).abs() == Rational(1, 3));
    CHECK(Rational(-1, 3).abs() == Rational(1, 3));
    CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("pow and factorial", "[rational]") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(2) == Rational(4));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::factorial(20) == Rational::factorial(19) * Rational(20));
}

TEST_CASE("to_double", "[rational]") {
    CHECK(Rational(-3, 4).to_double() == -0.75);
    CHECK(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
}
