#include "heckelab/hecke.hpp"

#include <algorithm>

#include "heckelab/numutil.hpp"

namespace heckelab {

Real HeckeEigenform::lambda_prime_power(long p, long j) const {
    if (j == 0) return Real(1L);
    SatakeParameter s = satake(*this, p);
    // sin((j+1)theta)/sin(theta); stable fallback via Chebyshev recurrence
    // when theta is near 0 or pi.
    Real st = sin(s.theta);
    if (abs(st) > Real(0.01)) return sin(s.theta * Real(j + 1)) / st;
    Real um1(0L), u0(1L), x = cos(s.theta);
    for (long i = 0; i < j; ++i) {
        Real u1 = Real(2L) * x * u0 - um1;
        um1 = u0;
        u0 = u1;
    }
    return u0;
}

RationalMatrix hecke_matrix(int k, long n, const std::vector<QSeries>& basis) {
    int d = (int)basis.size();
    if (d == 0) return {};
    for (const auto& b : basis)
        if (b.truncation < n * d)
            throw insufficient_precision_error("hecke_matrix: basis truncation below n*dim");
    // a_m(T_n f) = sum_{e | (m,n)} e^{k-1} a_{mn/e^2}(f).
    // Entry (i, j): coefficient of the echelon pivot q^{i+1} in T_n f_j.
    RationalMatrix A((std::size_t)d, std::vector<mpq_class>((std::size_t)d, mpq_class(0)));
    for (int j = 0; j < d; ++j) {
        const QSeries& f = basis[(std::size_t)j];
        for (int i = 0; i < d; ++i) {
            long m = i + 1;
            mpq_class acc(0);
            for (long e = 1; e <= std::min(m, n); ++e) {
                if (m % e || n % e) continue;
                mpz_class ek;
                mpz_ui_pow_ui(ek.get_mpz_t(), (unsigned long)e, (unsigned long)(k - 1));
                acc += mpq_class(ek) * f.a(m * n / (e * e));
            }
            A[(std::size_t)i][(std::size_t)j] = acc;
        }
    }
    return A;
}

namespace {

// Eigenvector of the rational matrix A for an approximate eigenvalue ev,
// normalized to first coordinate 1 (echelon basis => coordinates are the
// leading coefficients, and a_1 = 1 eigenforms have v_1 = 1).
std::vector<Real> eigenvector(const RationalMatrix& A, const Real& ev) {
    std::size_t d = A.size();
    // Solve (A - ev I) v = 0 by elimination with partial pivoting in mpfr.
    std::vector<std::vector<Real>> M(d, std::vector<Real>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            M[i][j] = Real(A[i][j]);
            if (i == j) M[i][j] -= ev;
        }
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < d && rank < d; ++col) {
        std::size_t best = rank;
        for (std::size_t r = rank; r < d; ++r)
            if (abs(M[r][col]) > abs(M[best][col])) best = r;
        if (M[best][col].is_zero()) continue;
        std::swap(M[best], M[rank]);
        // treat tiny pivots (at eigenvalue this matrix is singular) as zero
        if (abs(M[rank][col]) < Real::pow2(-(long)WorkingPrecision::get() / 2)) continue;
        for (std::size_t r = rank + 1; r < d; ++r) {
            Real f = M[r][col] / M[rank][col];
            for (std::size_t c2 = col; c2 < d; ++c2) M[r][c2] -= f * M[rank][c2];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Free variable: the last column without pivot; set to 1, back-substitute.
    std::vector<bool> has_pivot(d, false);
    for (auto c : pivot_col) has_pivot[c] = true;
    std::size_t free_col = d;
    for (std::size_t c = d; c-- > 0;)
        if (!has_pivot[c]) {
            free_col = c;
            break;
        }
    std::vector<Real> v(d, Real(0L));
    if (free_col == d) {
        // numerically nonsingular (should not happen at an eigenvalue); fall
        // back to the least-diagonal column
        free_col = d - 1;
    }
    v[free_col] = Real(1L);
    for (std::size_t pi = pivot_col.size(); pi-- > 0;) {
        std::size_t col = pivot_col[pi];
        Real s(0L);
        for (std::size_t c2 = col + 1; c2 < d; ++c2) s += M[pi][c2] * v[c2];
        v[col] = -s / M[pi][col];
    }
    return v;
}

} // namespace

std::vector<HeckeEigenform> eigenforms(int k, long N) {
    if (k % 2 != 0) throw invalid_weight_error("eigenforms: weight must be even");
    int d = dim_cusp_space(k);
    if (d == 0) return {};
    long need = std::max({N, (long)(3 * d), default_truncation(k)});
    auto basis = victor_miller_basis(k, need);

    RationalMatrix T2 = hecke_matrix(k, 2, basis);
    RationalMatrix T3 = hecke_matrix(k, 3, basis);

    // Pick a diagonalizing combination T2 + c*T3 with distinct eigenvalues.
    RationalMatrix A;
    std::vector<std::pair<mpq_class, mpq_class>> intervals;
    std::vector<mpz_class> ipoly;
    bool ok = false;
    for (long c = 0; c <= 10; ++c) {
        A = T2;
        if (c > 0)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) A[(std::size_t)i][(std::size_t)j] += mpq_class(c) * T3[(std::size_t)i][(std::size_t)j];
        auto cp = characteristic_polynomial(A);
        ipoly = primitive_integer_poly(cp);
        intervals = isolate_real_roots(ipoly);
        if ((int)intervals.size() == d) {
            ok = true;
            break;
        }
    }
    if (!ok) throw degenerate_spectrum_error("eigenforms: could not separate spectrum with T2 + c*T3");

    std::vector<Real> roots(intervals.size());
    for (std::size_t i = 0; i < intervals.size(); ++i)
        roots[i] = refine_root(ipoly, intervals[i].first, intervals[i].second);

    std::vector<HeckeEigenform> forms;
    Real half_k = (Real((long)k) - 1L) / 2L;
    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
        auto v = eigenvector(A, roots[ri]);
        // normalize a_1 = 1
        Real inv = Real(1L) / v[0];
        for (auto& x : v) x *= inv;

        HeckeEigenform f;
        f.weight = k;
        f.truncation = need;
        f.field_degree = irreducible_factor_degree(ipoly, roots, ri);
        f.a.assign((std::size_t)need + 1, Real(0L));
        f.lambda.assign((std::size_t)need + 1, Real(0L));
        for (long n = 1; n <= need; ++n) {
            Real acc(0L);
            for (int j = 0; j < d; ++j) {
                Real bj(basis[(std::size_t)j].a(n));
                acc.add_mul(v[(std::size_t)j], bj);
            }
            f.a[(std::size_t)n] = acc;
            f.lambda[(std::size_t)n] = acc / exp(half_k * log(Real(n)));
        }
        forms.push_back(std::move(f));
    }
    std::sort(forms.begin(), forms.end(), [](const HeckeEigenform& x, const HeckeEigenform& y) {
        if (x.lam(2) != y.lam(2)) return x.lam(2) < y.lam(2);
        return x.lam(3) < y.lam(3);
    });
    for (std::size_t i = 0; i < forms.size(); ++i) forms[i].index = (int)i;
    return forms;
}

SatakeParameter satake_from_lambda(long p, const Real& lambda_p) {
    Real two(2L);
    Real tol = Real::pow2(-(long)WorkingPrecision::get() / 2);
    if (abs(lambda_p) > two + tol)
        throw deligne_violation_error("satake: |lambda(p)| > 2; upstream bug");
    Real x = lambda_p / two;
    if (x > Real(1L)) x = Real(1L);
    if (x < Real(-1L)) x = Real(-1L);
    SatakeParameter s;
    s.p = p;
    s.theta = acos(x);
    s.alpha = polar(Real(1L), s.theta);
    return s;
}

SatakeParameter satake(const HeckeEigenform& f, long p) {
    if (p > f.truncation) throw insufficient_precision_error("satake: prime beyond truncation");
    return satake_from_lambda(p, f.lam(p));
}

std::vector<mpq_class> power_expansion_coefficients(int alpha) {
    // b_{alpha,beta} = alpha! (beta+1) / (((alpha-beta)/2)! ((alpha+beta)/2+1)!)
    // when alpha == beta (mod 2), else 0.
    std::vector<mpq_class> b((std::size_t)alpha + 1, mpq_class(0));
    mpz_class af = factorial_mpz((unsigned long)alpha);
    for (int beta = alpha % 2; beta <= alpha; beta += 2) {
        mpz_class num = af * mpz_class(beta + 1);
        mpz_class den = factorial_mpz((unsigned long)((alpha - beta) / 2)) *
                        factorial_mpz((unsigned long)((alpha + beta) / 2 + 1));
        mpq_class q(num, den);
        q.canonicalize();
        b[(std::size_t)beta] = q;
    }
    return b;
}

Real big_lambda(const SatakeParameter& alpha, long b) {
    return Real(2L) * cos(alpha.theta * Real(b));
}

Real sym2_twist_lambda(const HeckeEigenform& f, const SatakeParameter& alpha_u, int c) {
    long p = alpha_u.p;
    if (p > f.truncation) throw insufficient_precision_error("sym2_twist_lambda: prime beyond truncation");
    if (c == 1) {
        // lambda_f(p^2) * lambda_u(p)
        Real lf2 = f.lambda_prime_power(p, 2);
        Real lu = Real(2L) * cos(alpha_u.theta);
        return lf2 * lu;
    }
    if (c == 2) {
        // (lambda_f(p^4) - lambda_f(p^2) + 1)(lambda_u(p^2) - 1)
        Real lf4 = f.lambda_prime_power(p, 4);
        Real lf2 = f.lambda_prime_power(p, 2);
        Real lu2 = Real(2L) * cos(Real(2L) * alpha_u.theta) + 1L; // alpha^2 + 1 + alpha^-2
        return (lf4 - lf2 + 1L) * (lu2 - 1L);
    }
    throw invalid_input_error("sym2_twist_lambda: c must be 1 or 2");
}

} // namespace heckelab
