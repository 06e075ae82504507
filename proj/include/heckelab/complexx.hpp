#pragma once

// Minimal complex arithmetic over Real. std::complex is only specified for
// builtin floating types, so we carry our own.

#include "heckelab/real.hpp"

namespace heckelab {

struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0L) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0L) {}
    Complex(long r) : re(r), im(0L) {}
    Complex(double r, double i) : re(r), im(i) {}

    static Complex i() { return Complex(Real(0L), Real(1L)); }

    bool is_nan() const { return re.is_nan() || im.is_nan(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
    Complex& operator*=(const Real& b) { re *= b; im *= b; return *this; }
};

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex exp(const Complex& a) {
    Real m = exp(a.re);
    auto [s, c] = sin_cos(a.im);
    return {m * c, m * s};
}

// Principal branch logarithm.
inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

inline Complex polar(const Real& r, const Real& theta) {
    auto [s, c] = sin_cos(theta);
    return {r * c, r * s};
}

// e(x) = exp(2*pi*i*x)
inline Complex unit_exp(const Real& x) {
    Real two_pi = Real(2L) * Real::pi();
    return polar(Real(1L), two_pi * x);
}

// z^n for integer n (exact repeated squaring).
inline Complex pow_si(Complex base, long n) {
    bool inv = n < 0;
    unsigned long e = inv ? (unsigned long)(-n) : (unsigned long)n;
    Complex acc(Real(1L));
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (inv) return Complex(Real(1L)) / acc;
    return acc;
}

// n^{-s} = exp(-s log n) for positive real n.
inline Complex pow_complex(const Real& base, const Complex& s) {
    return exp(s * Complex(log(base)));
}

} // namespace heckelab
