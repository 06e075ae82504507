#pragma once

// Exact arithmetic on truncated q-expansions of modular forms for SL2(Z),
// and construction of echelon bases of the cusp spaces S_k.

#include <gmpxx.h>

#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

struct QSeries {
    int weight = 0;
    long truncation = 0;       // coefficients a_0..a_truncation are valid
    bool cuspidal = false;
    std::vector<mpq_class> coeffs;

    const mpq_class& a(long n) const { return coeffs[(std::size_t)n]; }
    mpq_class& a(long n) { return coeffs[(std::size_t)n]; }
};

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
// k must be even and >= 4.
QSeries eisenstein_series(int k, long N);

// Delta = q prod_{n>=1} (1-q^n)^24, truncated at N >= 1.
QSeries delta_series(long N);

QSeries multiply(const QSeries& f, const QSeries& g);
QSeries add(const QSeries& f, const QSeries& g);
QSeries scale(const QSeries& f, const mpq_class& c);
QSeries power(const QSeries& f, int e);

// dim S_k for level 1 (k even >= 0; odd k -> 0).
int dim_cusp_space(int k);

// Echelonized basis {f_i} of S_k with a_{f_i}(j) = delta_{ij}, 1 <= i,j <= dim.
// Built from monomials E4^a E6^b Delta^c by exact Gaussian elimination.
std::vector<QSeries> victor_miller_basis(int k, long N);

// Default truncation policy: one knob controlling downstream precision.
inline long default_truncation(int k) { return std::max(200L, 4L * k); }

} // namespace heckelab
