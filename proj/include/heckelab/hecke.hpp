#pragma once

// Hecke operators on S_k, the eigenbasis H_k, Satake parameters, and the
// eigenvalue combinatorics (power expansions, Lambda identities).

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "heckelab/polyroots.hpp"
#include "heckelab/qseries.hpp"
#include "heckelab/results.hpp"

namespace heckelab {

struct HeckeEigenform {
    int weight = 0;
    long truncation = 0;
    int index = 0;       // position in the lambda(2)-sorted eigenbasis
    int field_degree = 1;

    std::vector<Real> a;      // raw coefficients a_0..a_N, a_1 = 1
    std::vector<Real> lambda; // lambda(n) = a_n / n^{(k-1)/2}

    // Filled in lazily by the Lab facade; see lab.hpp.
    std::optional<InnerProductResult> petersson_norm;
    std::optional<LValueResult> sym2_at_1;

    const Real& lam(long n) const { return lambda[(std::size_t)n]; }
    // lambda(p^j) for arbitrary j via the Satake angle (sin((j+1)t)/sin t).
    Real lambda_prime_power(long p, long j) const;
};

struct SatakeParameter {
    long p = 0;
    Complex alpha;  // e^{i theta}, theta in [0, pi]
    Real theta{0L};
};

// Matrix of T_n in the given echelon basis of S_k, exact rationals.
// Requires basis truncation >= n * dim.
RationalMatrix hecke_matrix(int k, long n, const std::vector<QSeries>& basis);

// Complete eigenbasis of S_k with eigenvalues computed for all n <= N.
// Diagonalizes T_2, falling back to T_2 + c*T_3 (c = 1..10) on repeated
// eigenvalues. Sorted by lambda(2) ascending, then lambda(3).
std::vector<HeckeEigenform> eigenforms(int k, long N);

SatakeParameter satake(const HeckeEigenform& f, long p);
// Satake parameter with a prescribed normalized eigenvalue (|l| <= 2).
SatakeParameter satake_from_lambda(long p, const Real& lambda_p);

// b_{alpha,beta} with lambda(p)^alpha = sum_beta b_{alpha,beta} lambda(p^beta).
std::vector<mpq_class> power_expansion_coefficients(int alpha);

// Lambda(p^b) = alpha^b + alpha^{-b} = 2 cos(b theta).
Real big_lambda(const SatakeParameter& alpha, long b);

// Coefficients Lambda_{sym^2 f x u}(p^c) for c = 1, 2, evaluated on a supplied
// unit-circle parameter alpha_u standing in for the second factor.
Real sym2_twist_lambda(const HeckeEigenform& f, const SatakeParameter& alpha_u, int c);

} // namespace heckelab
