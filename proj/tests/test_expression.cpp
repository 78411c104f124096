#include "ccr/expression.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ccr;

TEST_CASE("parse_expr shapes") {
    const Expr q = Expr::var();
    CHECK(parse_expr("q^2") == Expr::pow(q, 2));
    CHECK(parse_expr("exp(-q^2)") == Expr::call(Function::Exp, Expr::neg(Expr::pow(q, 2))));
    CHECK(parse_expr(" q - 1 - 2 ") ==
          Expr::binary(ExprKind::Sub, Expr::binary(ExprKind::Sub, q, Expr::constant(1)), Expr::constant(2)));
    CHECK(parse_expr("1+2*q") ==
          Expr::binary(ExprKind::Add, Expr::constant(1), Expr::binary(ExprKind::Mul, Expr::constant(2), q)));
    CHECK(parse_expr("q/2/q") ==
          Expr::binary(ExprKind::Div, Expr::binary(ExprKind::Div, q, Expr::constant(2)), q));
    CHECK(parse_expr("(-q)^3") == Expr::pow(Expr::neg(q), 3));
    CHECK(parse_expr("--q") == Expr::neg(Expr::neg(q)));
    CHECK(parse_expr("0.25") == Expr::constant(Rational(1, 4)));
    CHECK(parse_expr("1.5e2") == Expr::constant(150));
    CHECK(parse_expr("sin ( cos(q) )") == Expr::call(Function::Sin, Expr::call(Function::Cos, q)));
}

TEST_CASE("parse_expr errors carry offsets") {
    auto offset_of = [](const char* text) -> long {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("q + * 2") == 4);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("(q") == 2);
    CHECK(offset_of("q)") == 1);
    CHECK(offset_of("tan(q)") == 0);
    CHECK(offset_of("2*foo") == 2);
    CHECK(offset_of("1.") == 0);
    CHECK(offset_of("q+1e") == 2);
    CHECK(offset_of("1.2.3") == 0);
    CHECK(offset_of("q^-1") == 2);
    CHECK(offset_of("q^1.5") == 3);
    CHECK(offset_of("q^99999") == 2);
    CHECK(offset_of("exp q") == 4);
}

TEST_CASE("eval_expr") {
    CHECK(eval_expr(parse_expr("q^2 - 1"), Rational(3)) == Rational(8));
    CHECK(eval_expr(parse_expr("q^2 - 1"), 3.0) == 8.0);
    CHECK(eval_expr(parse_expr("(q+1)/(2*q)"), Rational(1, 3)) == Rational(2));
    CHECK(eval_expr(parse_expr("exp(-q^2)"), 1.0) == 0.36787944117144233);
    CHECK(eval_expr(parse_expr("-q^2"), 2.0) == -4.0);
    CHECK_THROWS_AS(eval_expr(parse_expr("sin(q)/q"), 0.0), EvalError);
    CHECK_THROWS_AS(eval_expr(parse_expr("1/q"), Rational(0)), EvalError);
    CHECK_THROWS_AS(eval_expr(parse_expr("exp(q)"), Rational(1)), ModeError);
    CHECK(is_exact(parse_expr("q^3/7 - 2")));
    CHECK_FALSE(is_exact(parse_expr("1 + cos(q)")));
}

TEST_CASE("sample_expression") {
    const Grid g1(1, 1);
    const auto lin = sample_expression<ExactComplex>(g1, parse_expr("q"));
    CHECK(lin[-1] == ExactComplex(-1));
    CHECK(lin[0] == ExactComplex(0));
    CHECK(lin[1] == ExactComplex(1));

    const auto sq = sample_expression<ExactComplex>(Grid(2, 1), parse_expr("q^2"));
    const int expected[] = {4, 1, 0, 1, 4};
    for (int n = -2; n <= 2; ++n) CHECK(sq[n] == ExactComplex(expected[n + 2]));

    const auto gauss = sample_expression<FloatComplex>(g1, parse_expr("exp(-q^2)"));
    CHECK(std::abs(gauss[-1] - std::exp(-1.0)) <= 1e-15);
    CHECK(std::abs(gauss[0] - 1.0) <= 1e-15);
    CHECK(std::abs(gauss[1] - std::exp(-1.0)) <= 1e-15);

    CHECK_THROWS_AS(sample_expression<ExactComplex>(g1, parse_expr("exp(-q^2)")), ModeError);
}

namespace {

Expr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> num(0, 2000), scale(0, 3);
            const int s = scale(rng);
            return Expr::constant(Rational(num(rng)) / Rational(s == 0 ? 1 : s == 1 ? 10 : s == 2 ? 4 : 1000));
        }
        case 1: return Expr::var();
        case 2: return Expr::neg(random_tree(rng, depth - 1));
        case 3: return Expr::binary(ExprKind::Add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 4: return Expr::binary(ExprKind::Sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 5: return Expr::binary(ExprKind::Mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 6: return Expr::binary(ExprKind::Div, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 7: return Expr::pow(random_tree(rng, depth - 1), rng() % 6);
        default: {
            const Function fns[] = {Function::Sin, Function::Cos, Function::Exp};
            return Expr::call(fns[rng() % 3], random_tree(rng, depth - 1));
        }
    }
}

}  // namespace

TEST_CASE("parse(render(ast)) == ast for random trees up to depth 6") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 2000; ++trial) {
        const Expr tree = random_tree(rng, 1 + trial % 6);
        const std::string text = render(tree);
        INFO(text);
        CHECK(parse_expr(text) == tree);
    }
}

TEST_CASE("render rejects literals it cannot spell") {
    CHECK_THROWS_AS(render(Expr::constant(Rational(1, 3))), ValidationError);
    CHECK_THROWS_AS(render(Expr::constant(Rational(-1))), ValidationError);
    CHECK(render(parse_expr("exp( - q ^ 2 )")) == "exp(-q^2)");
}
