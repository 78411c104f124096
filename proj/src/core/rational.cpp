#include "ccr/rational.hpp"

#include "ccr/errors.hpp"
#include "ccr/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace ccr {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

[[noreturn]] void malformed(std::string_view text) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view original, std::string_view s) {
    std::string_view exponent_part;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent_part = s.substr(e + 1);
        s = s.substr(0, e);
        if (exponent_part.empty()) malformed(original);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
        if (frac_part.empty() || !all_digits(frac_part)) malformed(original);
    }
    if (!int_part.empty() && !all_digits(int_part)) malformed(original);
    if (int_part.empty() && frac_part.empty()) malformed(original);

    long exponent = 0;
    if (!exponent_part.empty()) {
        std::string_view digits = exponent_part;
        bool negative = false;
        if (digits.front() == '+' || digits.front() == '-') {
            negative = digits.front() == '-';
            digits.remove_prefix(1);
        }
        if (!all_digits(digits) || digits.size() > 6) malformed(original);
        exponent = std::stol(std::string(digits));
        if (negative) exponent = -exponent;
    }

    std::string mantissa = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(mantissa.empty() ? std::string("0") : mantissa, 10);
    exponent -= static_cast<long>(frac_part.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational out = exponent >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
    out.canonicalize();
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) malformed(text);
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) malformed(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        out = Rational(mpz_class(std::string(num), 10), d);
        out.canonicalize();
    } else {
        out = parse_decimal(text, s);
    }
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
    Rational canonical = value;
    canonical.canonicalize();
    return canonical.get_str(10);
}

std::optional<std::string> to_decimal_string(const Rational& value) {
    mpz_class den = value.get_den();
    const unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    const unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1) return std::nullopt;
    const unsigned long digits = std::max(twos, fives);

    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    mpz_class scaled = value.get_num() * p10 / value.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;

    std::string body = scaled.get_str(10);
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits - body.size() + 1, '0');
        body.insert(body.size() - digits, 1, '.');
    }
    return negative ? "-" + body : body;
}

double to_double(const Rational& value) {
    // mpq_get_d truncates toward zero; step once away from zero if that is closer.
    const double truncated = value.get_d();
    if (!std::isfinite(truncated)) return truncated;
    const Rational t(truncated);
    if (t == value) return truncated;
    const double away = std::nextafter(truncated, value > t ? std::numeric_limits<double>::infinity()
                                                            : -std::numeric_limits<double>::infinity());
    if (!std::isfinite(away)) return truncated;
    const Rational gap_truncated = abs(value - t);
    const Rational gap_away = abs(Rational(away) - value);
    if (gap_away < gap_truncated) return away;
    if (gap_truncated < gap_away) return truncated;
    std::uint64_t bits;
    std::memcpy(&bits, &truncated, sizeof bits);
    return (bits & 1u) == 0 ? truncated : away;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (sgn(value) < 0) return std::nullopt;
    if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 || mpz_perfect_square_p(value.get_den_mpz_t()) == 0)
        return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
    return Rational(num, den);
}

std::string render_shortest(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::logic_error("to_chars failed");
    return std::string(buf, end);
}

double parse_double(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double out = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
        throw ValidationError("malformed number '" + std::string(text) + "'");
    return out;
}

std::string to_string(NumericMode mode) { return mode == NumericMode::ExactRational ? "exact" : "float"; }

NumericMode parse_mode(std::string_view text) {
    if (text == "exact") return NumericMode::ExactRational;
    if (text == "float") return NumericMode::Float;
    throw ValidationError("unknown numeric mode '" + std::string(text) + "' (expected exact|float)");
}

}  // namespace ccr
