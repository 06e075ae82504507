#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "heckelab/complexx.hpp"
#include "heckelab/real.hpp"

namespace heckelab {

// Exact Bernoulli number B_n (B_1 = -1/2 convention), memoized.
const mpq_class& bernoulli_number(int n);

mpz_class factorial_mpz(unsigned long n);
mpz_class binomial_mpz(unsigned long n, unsigned long k);

// Primes up to n inclusive, segmented sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Number of divisors.
long divisor_count(long n);

// sigma_e(n) for n = 1..N (index 0 unused), exact.
std::vector<mpz_class> sigma_sieve(long N, int e);

std::int64_t gcd_int64(std::int64_t a, std::int64_t b);
// Inverse of a mod m (gcd(a, m) = 1), via extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Gauss-Legendre rule on [-1, 1]; nodes/weights at working precision.
// Cached per (order, precision).
struct GaussLegendre {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussLegendre& gauss_legendre(int order);

// Chebyshev interpolant on [a, b] built from function values at
// Chebyshev-Gauss-Lobatto points. Evaluation by Clenshaw recurrence.
class ChebSeries {
public:
    ChebSeries() = default;
    template <class F>
    static ChebSeries fit(const Real& a, const Real& b, int n, F&& f) {
        ChebSeries c;
        c.a_ = a;
        c.b_ = b;
        std::vector<Real> vals((std::size_t)n + 1);
        Real pi = Real::pi();
        for (int j = 0; j <= n; ++j) {
            Real x = cos(pi * Real((long)j) / (long)n); // in [-1,1]
            Real t = (a + b + (b - a) * x) / 2L;
            vals[(std::size_t)j] = f(t);
        }
        c.compute_coeffs(vals);
        return c;
    }

    Real eval(const Real& t) const;
    // Interpolant of the derivative d/dt.
    ChebSeries derivative() const;
    const std::vector<Real>& coeffs() const { return coef_; }
    const Real& lo() const { return a_; }
    const Real& hi() const { return b_; }

private:
    void compute_coeffs(const std::vector<Real>& values_at_lobatto);
    Real a_{0L}, b_{1L};
    std::vector<Real> coef_;
};

} // namespace heckelab
