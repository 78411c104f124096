#include "ccr/errors.hpp"
#include "ccr/grid.hpp"
#include "ccr/rational.hpp"
#include "ccr/scalar.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ccr;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational(" -0.125 ") == Rational(-1, 8));
    CHECK(parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(parse_rational("1E2") == Rational(100));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("+3") == Rational(3));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.", "1e", "1.2.3", "--1", "1/2/3", "0x10"})
        CHECK_THROWS_AS(parse_rational(bad), ValidationError);
}

TEST_CASE("to_double rounds to nearest") {
    CHECK(to_double(Rational(1, 10)) == 0.1);
    CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(Rational(-2, 3)) == -2.0 / 3.0);
    CHECK(to_double(Rational(5, 2)) == 2.5);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000'007L, 1'000'000'007L), den(1, 999'983L);
    for (int i = 0; i < 2000; ++i) {
        const long a = num(rng), b = den(rng);
        Rational r{mpz_class(a), mpz_class(b)};
        r.canonicalize();
        CHECK(to_double(r) == static_cast<double>(a) / static_cast<double>(b));
    }
}

TEST_CASE("decimal rendering is exact or absent") {
    CHECK(to_decimal_string(Rational(1, 2)) == "0.5");
    CHECK(to_decimal_string(Rational(-1, 8)) == "-0.125");
    CHECK(to_decimal_string(Rational(1, 10)) == "0.1");
    CHECK(to_decimal_string(Rational(123, 4)) == "30.75");
    CHECK(to_decimal_string(Rational(7)) == "7");
    CHECK_FALSE(to_decimal_string(Rational(1, 3)).has_value());
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("exact_sqrt") {
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("shortest decimals round-trip") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(parse_double(render_shortest(x)) == x);
    }
    CHECK(render_shortest(-0.0) == "0");
    CHECK(render_shortest(0.5) == "0.5");
    CHECK_THROWS_AS(parse_double("1.0x"), ValidationError);
}

TEST_CASE("ExactComplex field arithmetic") {
    const ExactComplex i(0, 1);
    CHECK(i * i == ExactComplex(-1));
    const ExactComplex a(Rational(1, 2), Rational(-3, 4)), b(Rational(2), Rational(5, 3));
    CHECK((a * b) / b == a);
    CHECK((a - b) + b == a);
    CHECK(-a + a == ExactComplex(0));
    CHECK_THROWS_AS(a / ExactComplex(0), std::domain_error);
    CHECK(to_float(a) == FloatComplex(0.5, -0.75));
    CHECK(scalar_traits<ExactComplex>::magnitude(ExactComplex(Rational(3), Rational(4))) == 5.0);
}

TEST_CASE("grid_new") {
    SUBCASE("N=2, l=1 gives D=5 and rows -2..2") {
        const Grid g(2, 1);
        CHECK(g.dim() == 5);
        CHECK(g.min_row() == -2);
        CHECK(g.max_row() == 2);
        CHECK(g.index_of(0) == 2);
        CHECK(g.hbar() == 1);
        CHECK(g.boundary() == Boundary::Open);
    }
    SUBCASE("N=1, l=1/2 periodic gives q-values -1/2, 0, 1/2") {
        const Grid g(1, Rational(1, 2), Boundary::Periodic);
        CHECK(g.dim() == 3);
        CHECK(g.position(-1) == Rational(-1, 2));
        CHECK(g.position(0) == 0);
        CHECK(g.position(1) == Rational(1, 2));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(Grid(0, 1), ValidationError);
        CHECK_THROWS_AS(Grid(-3, 1), ValidationError);
        CHECK_THROWS_AS(Grid(1, 0), ValidationError);
        CHECK_THROWS_AS(Grid(1, Rational(-1, 2)), ValidationError);
        CHECK_THROWS_AS(Grid(1, 1, Boundary::Open, 0), ValidationError);
    }
    SUBCASE("interior classification") {
        const Grid g(3, 1);
        CHECK_FALSE(g.is_interior(-3));
        CHECK(g.is_interior(-2));
        CHECK(g.is_interior(0));
        CHECK_FALSE(g.is_interior(3));
    }
}

TEST_CASE("enum text forms") {
    CHECK(parse_boundary("periodic") == Boundary::Periodic);
    CHECK(to_string(Boundary::Open) == "open");
    CHECK(parse_mode("float") == NumericMode::Float);
    CHECK_THROWS_AS(parse_boundary("closed"), ValidationError);
    CHECK_THROWS_AS(parse_mode("fixed"), ValidationError);
}
