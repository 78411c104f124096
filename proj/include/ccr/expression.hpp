#pragma once

#include "ccr/errors.hpp"
#include "ccr/grid.hpp"
#include "ccr/rational.hpp"
#include "ccr/wave_vector.hpp"

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace ccr {

enum class ExprKind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Function { Sin, Cos, Exp };

std::string_view function_name(Function f);

/// Syntax tree of a real wavefunction psi(q).
struct Expr {
    ExprKind kind = ExprKind::Number;
    Rational number;                 // Number
    unsigned exponent = 0;           // Pow
    Function function = Function::Exp;  // Call
    std::vector<Expr> children;

    static Expr constant(Rational value);
    static Expr var();
    static Expr neg(Expr operand);
    static Expr binary(ExprKind kind, Expr lhs, Expr rhs);
    static Expr pow(Expr base, unsigned exponent);
    static Expr call(Function f, Expr argument);

    friend bool operator==(const Expr& a, const Expr& b);
};

/// Largest exponent literal accepted by the parser.
inline constexpr unsigned kMaxExponent = 1024;

/// Grammar, lowest precedence first:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' uint)?
///   atom  := number | 'q' | name '(' expr ')' | '(' expr ')'
/// with name in {sin, cos, exp}. Whitespace is ignored; binary operators are
/// left associative. Throws ParseError carrying the offending offset.
Expr parse_expr(std::string_view text);

/// Inverse of parse_expr up to whitespace and number spelling. Numbers must be
/// nonnegative terminating decimals (true of every parsed tree).
std::string render(const Expr& e);

/// True when the tree has no Call node, so it evaluates exactly at rational q.
bool is_exact(const Expr& e);

/// Exact evaluation. ModeError on a Call node, EvalError on division by zero.
Rational eval_expr(const Expr& e, const Rational& q);

/// Double evaluation, one rounded operation per node in tree order. EvalError
/// on division by zero.
double eval_expr(const Expr& e, double q);

/// Samples e on the grid. Requesting the exact field for a tree with Call nodes
/// is a ModeError.
template <Field T>
WaveVector<T> sample_expression(const Grid& grid, const Expr& e) {
    if constexpr (std::is_same_v<T, ExactComplex>) {
        if (!is_exact(e))
            throw ModeError("expression '" + render(e) + "' calls transcendental functions; use float mode");
        return sample<T>(grid, [&](const Rational& q) { return eval_expr(e, q); });
    } else {
        return sample<T>(grid, [&](double q) { return eval_expr(e, q); });
    }
}

}  // namespace ccr
