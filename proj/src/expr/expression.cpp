#include "ccr/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <optional>

namespace ccr {

std::string_view function_name(Function f) {
    switch (f) {
        case Function::Sin: return "sin";
        case Function::Cos: return "cos";
        case Function::Exp: return "exp";
    }
    return "?";
}

Expr Expr::constant(Rational value) {
    Expr e;
    e.kind = ExprKind::Number;
    e.number = std::move(value);
    return e;
}

Expr Expr::var() {
    Expr e;
    e.kind = ExprKind::Var;
    return e;
}

Expr Expr::neg(Expr operand) {
    Expr e;
    e.kind = ExprKind::Neg;
    e.children.push_back(std::move(operand));
    return e;
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

Expr Expr::pow(Expr base, unsigned exponent) {
    Expr e;
    e.kind = ExprKind::Pow;
    e.exponent = exponent;
    e.children.push_back(std::move(base));
    return e;
}

Expr Expr::call(Function f, Expr argument) {
    Expr e;
    e.kind = ExprKind::Call;
    e.function = f;
    e.children.push_back(std::move(argument));
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.children != b.children) return false;
    switch (a.kind) {
        case ExprKind::Number: return a.number == b.number;
        case ExprKind::Pow: return a.exponent == b.exponent;
        case ExprKind::Call: return a.function == b.function;
        default: return true;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    Expr expr() {
        Expr lhs = term();
        while (true) {
            skip_space();
            if (accept('+')) {
                lhs = Expr::binary(ExprKind::Add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = Expr::binary(ExprKind::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        while (true) {
            skip_space();
            if (accept('*')) {
                lhs = Expr::binary(ExprKind::Mul, std::move(lhs), unary());
            } else if (accept('/')) {
                lhs = Expr::binary(ExprKind::Div, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        skip_space();
        if (accept('-')) return Expr::neg(unary());
        return power();
    }

    Expr power() {
        Expr base = atom();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 5 || std::stoul(digits) > kMaxExponent)
            fail_at("exponent exceeds " + std::to_string(kMaxExponent), start);
        return Expr::pow(std::move(base), static_cast<unsigned>(std::stoul(digits)));
    }

    Expr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        if (accept('(')) {
            Expr inner = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ - from;
        };
        const std::size_t int_digits = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (digits() == 0) fail_at("malformed number", start);
        } else if (int_digits == 0) {
            fail_at("malformed number", start);
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail_at("malformed number", start);
        }
        if (pos_ < text_.size() && (text_[pos_] == '.' || std::isdigit(static_cast<unsigned char>(text_[pos_]))))
            fail_at("malformed number", start);
        try {
            return Expr::constant(parse_rational(text_.substr(start, pos_ - start)));
        } catch (const ValidationError&) {
            fail_at("malformed number", start);
        }
    }

    Expr name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view id = text_.substr(start, pos_ - start);
        if (id == "q") return Expr::var();

        static constexpr std::array catalog{Function::Sin, Function::Cos, Function::Exp};
        std::optional<Function> fn;
        for (Function f : catalog)
            if (function_name(f) == id) fn = f;
        if (!fn) fail_at("unknown function '" + std::string(id) + "'", start);

        skip_space();
        if (!accept('(')) fail("expected '(' after " + std::string(id));
        Expr arg = expr();
        skip_space();
        if (!accept(')')) fail("expected ')'");
        return Expr::call(*fn, std::move(arg));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        default: return 5;
    }
}

std::string wrapped(const Expr& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

char operator_symbol(ExprKind kind) {
    switch (kind) {
        case ExprKind::Add: return '+';
        case ExprKind::Sub: return '-';
        case ExprKind::Mul: return '*';
        default: return '/';
    }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Number: {
            auto text = sgn(e.number) >= 0 ? to_decimal_string(e.number) : std::nullopt;
            if (!text) throw ValidationError("cannot render " + to_string(e.number) + " as a decimal literal");
            return *text;
        }
        case ExprKind::Var: return "q";
        case ExprKind::Call: return std::string(function_name(e.function)) + "(" + render(e.children[0]) + ")";
        case ExprKind::Neg: return "-" + wrapped(e.children[0], precedence(e.children[0]) < 3);
        case ExprKind::Pow:
            return wrapped(e.children[0], precedence(e.children[0]) < 5) + "^" + std::to_string(e.exponent);
        default: {
            const int p = precedence(e);
            return wrapped(e.children[0], precedence(e.children[0]) < p) + operator_symbol(e.kind) +
                   wrapped(e.children[1], precedence(e.children[1]) <= p);
        }
    }
}

bool is_exact(const Expr& e) {
    if (e.kind == ExprKind::Call) return false;
    for (const auto& c : e.children)
        if (!is_exact(c)) return false;
    return true;
}

Rational eval_expr(const Expr& e, const Rational& q) {
    switch (e.kind) {
        case ExprKind::Number: return e.number;
        case ExprKind::Var: return q;
        case ExprKind::Neg: return -eval_expr(e.children[0], q);
        case ExprKind::Add: return eval_expr(e.children[0], q) + eval_expr(e.children[1], q);
        case ExprKind::Sub: return eval_expr(e.children[0], q) - eval_expr(e.children[1], q);
        case ExprKind::Mul: return eval_expr(e.children[0], q) * eval_expr(e.children[1], q);
        case ExprKind::Div: {
            Rational num = eval_expr(e.children[0], q);
            Rational den = eval_expr(e.children[1], q);
            if (sgn(den) == 0) throw EvalError("division by zero");
            return num / den;
        }
        case ExprKind::Pow: {
            const Rational base = eval_expr(e.children[0], q);
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e.exponent);
            mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e.exponent);
            return Rational(num, den);
        }
        case ExprKind::Call:
            throw ModeError(std::string(function_name(e.function)) + " cannot be evaluated exactly");
    }
    throw std::logic_error("unknown expression node");
}

double eval_expr(const Expr& e, double q) {
    switch (e.kind) {
        case ExprKind::Number: return to_double(e.number);
        case ExprKind::Var: return q;
        case ExprKind::Neg: return -eval_expr(e.children[0], q);
        case ExprKind::Add: return eval_expr(e.children[0], q) + eval_expr(e.children[1], q);
        case ExprKind::Sub: return eval_expr(e.children[0], q) - eval_expr(e.children[1], q);
        case ExprKind::Mul: return eval_expr(e.children[0], q) * eval_expr(e.children[1], q);
        case ExprKind::Div: {
            const double num = eval_expr(e.children[0], q);
            const double den = eval_expr(e.children[1], q);
            if (den == 0.0) throw EvalError("division by zero");
            return num / den;
        }
        case ExprKind::Pow: {
            const double base = eval_expr(e.children[0], q);
            double out = 1.0;
            for (unsigned i = 0; i < e.exponent; ++i) out *= base;
            return out;
        }
        case ExprKind::Call: {
            const double x = eval_expr(e.children[0], q);
            switch (e.function) {
                case Function::Sin: return std::sin(x);
                case Function::Cos: return std::cos(x);
                case Function::Exp: return std::exp(x);
            }
        }
    }
    throw std::logic_error("unknown expression node");
}

}  // namespace ccr
