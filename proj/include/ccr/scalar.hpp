#pragma once

#include "ccr/rational.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace ccr {

enum class NumericMode { ExactRational, Float };

std::string to_string(NumericMode mode);
NumericMode parse_mode(std::string_view text);

/// Complex number with arbitrary-precision rational parts.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(int value) : re(value), im(0) {}  // NOLINT: Eigen needs Scalar(0)
    ExactComplex(Rational real) : re(std::move(real)), im(0) {}
    ExactComplex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend ExactComplex operator-(const ExactComplex& a) { return {Rational(-a.re), Rational(-a.im)}; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
        return os << '(' << to_string(z.re) << ',' << to_string(z.im) << ')';
    }
};

inline ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    const Rational norm = o.re * o.re + o.im * o.im;
    if (norm == 0) throw std::domain_error("ExactComplex division by zero");
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

using FloatComplex = std::complex<double>;

inline FloatComplex to_float(const ExactComplex& z) { return {to_double(z.re), to_double(z.im)}; }

/// Uniform access to the two numeric fields. Generic code in this library is
/// written against these traits only.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
    using real_type = Rational;
    static constexpr NumericMode mode = NumericMode::ExactRational;

    static ExactComplex make(const Rational& re, const Rational& im = 0) { return {re, im}; }
    static ExactComplex from_parts(real_type re, real_type im) { return {std::move(re), std::move(im)}; }
    static const Rational& real(const ExactComplex& z) { return z.re; }
    static const Rational& imag(const ExactComplex& z) { return z.im; }
    static ExactComplex conj(const ExactComplex& z) { return {z.re, Rational(-z.im)}; }
    static bool is_zero(const ExactComplex& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
    static Rational squared_magnitude(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }
    /// sqrt(x), exact whenever x is a rational square.
    static double root(const Rational& x) {
        if (auto exact = exact_sqrt(x)) return to_double(*exact);
        return std::sqrt(to_double(x));
    }
    static double magnitude(const ExactComplex& z) { return root(squared_magnitude(z)); }
    static std::string render(const Rational& x) { return to_string(x); }
    static Rational parse(std::string_view text) { return parse_rational(text); }
};

std::string render_shortest(double x);
double parse_double(std::string_view text);

template <>
struct scalar_traits<FloatComplex> {
    using real_type = double;
    static constexpr NumericMode mode = NumericMode::Float;

    static FloatComplex make(const Rational& re, const Rational& im = 0) {
        return {to_double(re), to_double(im)};
    }
    static FloatComplex from_parts(double re, double im) { return {re, im}; }
    static double real(const FloatComplex& z) { return z.real(); }
    static double imag(const FloatComplex& z) { return z.imag(); }
    static FloatComplex conj(const FloatComplex& z) { return std::conj(z); }
    static bool is_zero(const FloatComplex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
    static double squared_magnitude(const FloatComplex& z) { return std::norm(z); }
    static double root(double x) { return std::sqrt(x); }
    static double magnitude(const FloatComplex& z) { return std::abs(z); }
    static std::string render(double x) { return render_shortest(x); }
    static double parse(std::string_view text) { return parse_double(text); }
};

template <class T>
concept Field = requires { scalar_traits<T>::mode; };

}  // namespace ccr

namespace Eigen {

// Eigen only stores and indexes ExactComplex; conjugation goes through
// scalar_traits, so the complex flag stays off.
template <>
struct NumTraits<ccr::ExactComplex> : GenericNumTraits<ccr::ExactComplex> {
    using Real = ccr::ExactComplex;
    using NonInteger = ccr::ExactComplex;
    using Nested = ccr::ExactComplex;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 16,
        MulCost = 64
    };
};

}  // namespace Eigen
