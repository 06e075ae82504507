#pragma once

// Thin RAII wrapper around mpfr_t with a thread-local working precision.
// All operator results are produced at the current working precision, so a
// fixed configuration yields bit-identical results independent of evaluation
// order or thread count.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>
#include <cstdint>

namespace heckelab {

class WorkingPrecision {
public:
    static mpfr_prec_t get() { return tls_prec(); }
    static void set(mpfr_prec_t p) { tls_prec() = p; }

    // RAII scope guard: bump precision inside a block, restore on exit.
    explicit WorkingPrecision(mpfr_prec_t p) : saved_(tls_prec()) { tls_prec() = p; }
    ~WorkingPrecision() { tls_prec() = saved_; }
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    static mpfr_prec_t& tls_prec() {
        thread_local mpfr_prec_t prec = 192;
        return prec;
    }
    mpfr_prec_t saved_;
};

class Real {
public:
    Real() { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_zero(v_, 1); }
    Real(double d) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(long n) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(unsigned long n) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_ui(v_, n, MPFR_RNDN); }
    Real(const mpz_class& z) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& q) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    explicit Real(const char* s) { mpfr_init2(v_, WorkingPrecision::get()); mpfr_set_str(v_, s, 10, MPFR_RNDN); }
    explicit Real(const std::string& s) : Real(s.c_str()) {}

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real nan() { Real r; mpfr_set_nan(r.v_); return r; }
    static Real inf(int sign = 1) { Real r; mpfr_set_inf(r.v_, sign); return r; }
    // 2^e as an exact Real (useful for tolerances tied to precision)
    static Real pow2(long e) { Real r(1L); mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN); return r; }

    // Copy rounded to the current working precision (used when leaving a
    // precision-bumped scope).
    Real rounded_to_working() const {
        Real r;
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal string with the given number of significant digits (round-trip safe
    // when digits covers the precision). Used for all serialized output.
    std::string to_string(int digits = 0) const;

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    // In-place fused helpers for hot loops.
    void add_mul(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
    void sub_mul(const Real& a, const Real& b) { mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN); mpfr_neg(v_, v_, MPFR_RNDN); }
    void mul_2si(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); }

private:
    mpfr_t v_;
};

inline Real abs(const Real& a) { Real r; mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& a) { Real r; mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real expm1(const Real& a) { Real r; mpfr_expm1(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& a) { Real r; mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log1p(const Real& a) { Real r; mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sin(const Real& a) { Real r; mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& a) { Real r; mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline std::pair<Real, Real> sin_cos(const Real& a) {
    std::pair<Real, Real> sc;
    mpfr_sin_cos(sc.first.raw(), sc.second.raw(), a.raw(), MPFR_RNDN);
    return sc;
}
inline Real tan(const Real& a) { Real r; mpfr_tan(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real atan(const Real& a) { Real r; mpfr_atan(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real acos(const Real& a) { Real r; mpfr_acos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real asin(const Real& a) { Real r; mpfr_asin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sinh(const Real& a) { Real r; mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cosh(const Real& a) { Real r; mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real tanh(const Real& a) { Real r; mpfr_tanh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real asinh(const Real& a) { Real r; mpfr_asinh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real acosh(const Real& a) { Real r; mpfr_acosh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real hypot(const Real& a, const Real& b) { Real r; mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& a, const Real& b) { Real r; mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real pow_si(const Real& a, long e) { Real r; mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN); return r; }
inline Real floor(const Real& a) { Real r; mpfr_floor(r.raw(), a.raw()); return r; }
inline Real ceil(const Real& a) { Real r; mpfr_ceil(r.raw(), a.raw()); return r; }
inline Real round_nearest(const Real& a) { Real r; mpfr_round(r.raw(), a.raw()); return r; }
inline Real min(const Real& a, const Real& b) { Real r; mpfr_min(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { Real r; mpfr_max(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real lngamma(const Real& a) { Real r; mpfr_lngamma(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real gamma(const Real& a) { Real r; mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN); return r; }
// Upper incomplete gamma Gamma(a, x).
inline Real gamma_inc_upper(const Real& a, const Real& x) {
    Real r;
    mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (digits <= 0) digits = (int)(mpfr_get_prec(v_) * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits - 1);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

} // namespace heckelab
