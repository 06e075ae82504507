#include "heckelab/qseries.hpp"

#include <algorithm>

#include "heckelab/numutil.hpp"

namespace heckelab {

QSeries eisenstein_series(int k, long N) {
    if (k < 4 || k % 2 != 0) throw invalid_weight_error("eisenstein_series: weight must be even and >= 4");
    if (N < 0) throw invalid_input_error("eisenstein_series: truncation must be >= 0");
    QSeries e;
    e.weight = k;
    e.truncation = N;
    e.cuspidal = false;
    e.coeffs.assign((std::size_t)N + 1, mpq_class(0));
    e.coeffs[0] = 1;
    if (N >= 1) {
        mpq_class factor = mpq_class(-2L * k) / bernoulli_number(k);
        factor.canonicalize();
        auto sig = sigma_sieve(N, k - 1);
        for (long n = 1; n <= N; ++n) e.coeffs[(std::size_t)n] = factor * mpq_class(sig[(std::size_t)n]);
    }
    return e;
}

QSeries delta_series(long N) {
    if (N < 1) throw invalid_input_error("delta_series: truncation must be >= 1");
    // q * prod (1-q^n)^24 via Euler's pentagonal series squared:
    // prod(1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}; raise to 24 = ((eta^3)^8) would
    // work too, but plain repeated sparse multiplication is fast at these sizes.
    // Use eta^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2} (Jacobi), then cube of squares.
    long M = N - 1; // coefficients of prod^24 needed to q^{N-1}
    std::vector<mpz_class> eta3((std::size_t)M + 1, mpz_class(0));
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e > M) break;
        eta3[(std::size_t)e] = (k % 2 == 0) ? mpz_class(2 * k + 1) : mpz_class(-(2 * k + 1));
    }
    auto sq = [M](const std::vector<mpz_class>& u) {
        std::vector<mpz_class> r((std::size_t)M + 1, mpz_class(0));
        for (long i = 0; i <= M; ++i) {
            if (u[(std::size_t)i] == 0) continue;
            for (long j = 0; i + j <= M; ++j) {
                if (u[(std::size_t)j] == 0) continue;
                r[(std::size_t)(i + j)] += u[(std::size_t)i] * u[(std::size_t)j];
            }
        }
        return r;
    };
    auto eta6 = sq(eta3);
    auto eta12 = sq(eta6);
    auto eta24 = sq(eta12);

    QSeries d;
    d.weight = 12;
    d.truncation = N;
    d.cuspidal = true;
    d.coeffs.assign((std::size_t)N + 1, mpq_class(0));
    for (long n = 1; n <= N; ++n) d.coeffs[(std::size_t)n] = mpq_class(eta24[(std::size_t)(n - 1)]);
    return d;
}

QSeries multiply(const QSeries& f, const QSeries& g) {
    QSeries r;
    r.weight = f.weight + g.weight;
    r.truncation = std::min(f.truncation, g.truncation);
    r.cuspidal = f.cuspidal || g.cuspidal;
    long N = r.truncation;
    r.coeffs.assign((std::size_t)N + 1, mpq_class(0));
    for (long i = 0; i <= N; ++i) {
        if (f.coeffs[(std::size_t)i] == 0) continue;
        for (long j = 0; i + j <= N; ++j) {
            if (g.coeffs[(std::size_t)j] == 0) continue;
            r.coeffs[(std::size_t)(i + j)] += f.coeffs[(std::size_t)i] * g.coeffs[(std::size_t)j];
        }
    }
    return r;
}

QSeries add(const QSeries& f, const QSeries& g) {
    if (f.weight != g.weight) throw invalid_input_error("add: weights differ");
    QSeries r;
    r.weight = f.weight;
    r.truncation = std::min(f.truncation, g.truncation);
    r.coeffs.resize((std::size_t)r.truncation + 1);
    for (long n = 0; n <= r.truncation; ++n)
        r.coeffs[(std::size_t)n] = f.coeffs[(std::size_t)n] + g.coeffs[(std::size_t)n];
    r.cuspidal = (r.coeffs[0] == 0);
    return r;
}

QSeries scale(const QSeries& f, const mpq_class& c) {
    QSeries r = f;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

QSeries power(const QSeries& f, int e) {
    QSeries acc;
    acc.weight = 0;
    acc.truncation = f.truncation;
    acc.cuspidal = false;
    acc.coeffs.assign((std::size_t)f.truncation + 1, mpq_class(0));
    acc.coeffs[0] = 1;
    for (int i = 0; i < e; ++i) acc = multiply(acc, f);
    return acc;
}

int dim_cusp_space(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    if (k % 12 == 2) return k / 12 - 1;
    return k / 12;
}

std::vector<QSeries> victor_miller_basis(int k, long N) {
    if (k % 2 != 0 || k < 0) throw invalid_weight_error("victor_miller_basis: weight must be even and >= 0");
    int d = dim_cusp_space(k);
    if (d == 0) return {};
    if (N < d) throw insufficient_precision_error("victor_miller_basis: truncation below dim S_k");

    // Monomials E4^a E6^b Delta^c of weight k with c >= 1 span S_k.
    QSeries e4 = eisenstein_series(4, N);
    QSeries e6 = eisenstein_series(6, N);
    QSeries del = delta_series(N);

    std::vector<QSeries> rows;
    for (int c = 1; 12 * c <= k; ++c) {
        int rem = k - 12 * c;
        for (int b = 0; 6 * b <= rem; ++b) {
            if ((rem - 6 * b) % 4 != 0) continue;
            int a = (rem - 6 * b) / 4;
            QSeries m = power(del, c);
            for (int i = 0; i < a; ++i) m = multiply(m, e4);
            for (int i = 0; i < b; ++i) m = multiply(m, e6);
            rows.push_back(std::move(m));
            if ((int)rows.size() >= d) break;
        }
        if ((int)rows.size() >= d) break;
    }
    if ((int)rows.size() < d)
        throw degenerate_basis_error("victor_miller_basis: not enough monomials (internal)");

    // Exact Gaussian elimination to echelon form with pivots at q^1..q^d.
    for (int pivot = 1; pivot <= d; ++pivot) {
        int sel = -1;
        for (int r = pivot - 1; r < (int)rows.size(); ++r) {
            if (rows[(std::size_t)r].coeffs[(std::size_t)pivot] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) throw insufficient_precision_error("victor_miller_basis: echelonization failed");
        std::swap(rows[(std::size_t)(pivot - 1)], rows[(std::size_t)sel]);
        QSeries& prow = rows[(std::size_t)(pivot - 1)];
        mpq_class inv = 1 / prow.coeffs[(std::size_t)pivot];
        prow = scale(prow, inv);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == pivot - 1) continue;
            const mpq_class& c = rows[(std::size_t)r].coeffs[(std::size_t)pivot];
            if (c == 0) continue;
            QSeries sub = scale(prow, -c);
            rows[(std::size_t)r] = add(rows[(std::size_t)r], sub);
        }
    }
    rows.resize((std::size_t)d);
    for (auto& r : rows) r.cuspidal = true;
    return rows;
}

} // namespace heckelab
