#include "heckelab/exact_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "heckelab/errors.hpp"
#include "heckelab/numutil.hpp"
#include "heckelab/qseries.hpp"

namespace heckelab {

namespace {

// Kronecker substitution: pack nonnegative-coefficient polynomials into one
// big integer each, multiply with mpz_mul (GMP does the FFT), unpack. Signed
// inputs are split into positive/negative parts first.

std::vector<mpz_class> conv_nonneg(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                   std::size_t out_len, mp_bitcnt_t pad) {
    mpz_class pa(0), pb(0);
    for (std::size_t i = a.size(); i-- > 0;) {
        pa <<= pad;
        pa += a[i];
    }
    for (std::size_t i = b.size(); i-- > 0;) {
        pb <<= pad;
        pb += b[i];
    }
    mpz_class prod = pa * pb;
    std::vector<mpz_class> out(out_len, mpz_class(0));
    mpz_class mask = (mpz_class(1) << pad) - 1;
    for (std::size_t n = 0; n < out_len; ++n) {
        if (prod == 0) break;
        out[n] = prod & mask;
        prod >>= pad;
    }
    return out;
}

} // namespace

std::vector<mpz_class> poly_mul_exact(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b,
                                      std::size_t out_len) {
    std::vector<mpz_class> out(out_len, mpz_class(0));
    if (a.empty() || b.empty() || out_len == 0) return out;

    std::size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
    mpz_class ma(0), mb(0);
    for (std::size_t i = 0; i < la; ++i) if (cmp(abs(a[i]), ma) > 0) ma = abs(a[i]);
    for (std::size_t i = 0; i < lb; ++i) if (cmp(abs(b[i]), mb) > 0) mb = abs(b[i]);
    if (ma == 0 || mb == 0) return out;
    mpz_class bound = ma * mb * mpz_class((unsigned long)std::min(la, lb));
    mp_bitcnt_t pad = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;

    // split into positive/negative parts
    auto split = [](const std::vector<mpz_class>& v, std::size_t len) {
        std::pair<std::vector<mpz_class>, std::vector<mpz_class>> pn;
        pn.first.assign(len, mpz_class(0));
        pn.second.assign(len, mpz_class(0));
        bool any_neg = false;
        for (std::size_t i = 0; i < len; ++i) {
            if (v[i] >= 0)
                pn.first[i] = v[i];
            else {
                pn.second[i] = -v[i];
                any_neg = true;
            }
        }
        if (!any_neg) pn.second.clear();
        return pn;
    };
    auto [ap, an] = split(a, la);
    auto [bp, bn] = split(b, lb);

    auto acc = [&](const std::vector<mpz_class>& u, const std::vector<mpz_class>& v, int sign) {
        if (u.empty() || v.empty()) return;
        auto c = conv_nonneg(u, v, out_len, pad);
        for (std::size_t n = 0; n < out_len; ++n) {
            if (sign > 0)
                out[n] += c[n];
            else
                out[n] -= c[n];
        }
    };
    acc(ap, bp, +1);
    acc(an, bn, +1);
    acc(ap, bn, -1);
    acc(an, bp, -1);
    return out;
}

std::vector<mpz_class> delta_coefficients_big(long N) {
    if (N < 1) throw invalid_input_error("delta_coefficients_big: N >= 1 required");
    long M = N - 1;
    // eta^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2} (sparse), then square up.
    std::vector<mpz_class> eta3((std::size_t)M + 1, mpz_class(0));
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e > M) break;
        eta3[(std::size_t)e] = (k % 2 == 0) ? mpz_class(2 * k + 1) : mpz_class(-(2 * k + 1));
    }
    auto eta6 = poly_mul_exact(eta3, eta3, (std::size_t)M + 1);
    auto eta12 = poly_mul_exact(eta6, eta6, (std::size_t)M + 1);
    auto eta24 = poly_mul_exact(eta12, eta12, (std::size_t)M + 1);
    std::vector<mpz_class> tau((std::size_t)N + 1, mpz_class(0));
    for (long n = 1; n <= N; ++n) tau[(std::size_t)n] = eta24[(std::size_t)(n - 1)];
    return tau;
}

std::vector<std::vector<mpz_class>> victor_miller_basis_big(int k, long N) {
    int d = dim_cusp_space(k);
    if (d == 0) return {};
    if (N < d) throw insufficient_precision_error("victor_miller_basis_big: truncation below dim");

    std::vector<mpz_class> e4((std::size_t)N + 1), e6((std::size_t)N + 1);
    {
        auto s3 = sigma_sieve(N, 3);
        auto s5 = sigma_sieve(N, 5);
        e4[0] = 1;
        e6[0] = 1;
        for (long n = 1; n <= N; ++n) {
            e4[(std::size_t)n] = 240 * s3[(std::size_t)n];
            e6[(std::size_t)n] = -504 * s5[(std::size_t)n];
        }
    }
    auto del = delta_coefficients_big(N); // index n holds a_n, a_0 = 0

    std::vector<std::vector<mpz_class>> rows;
    for (int c = 1; 12 * c <= k && (int)rows.size() < d; ++c) {
        int rem = k - 12 * c;
        for (int b = 0; 6 * b <= rem && (int)rows.size() < d; ++b) {
            if ((rem - 6 * b) % 4 != 0) continue;
            int a = (rem - 6 * b) / 4;
            std::vector<mpz_class> m = del;
            for (int i = 1; i < c; ++i) m = poly_mul_exact(m, del, (std::size_t)N + 1);
            for (int i = 0; i < a; ++i) m = poly_mul_exact(m, e4, (std::size_t)N + 1);
            for (int i = 0; i < b; ++i) m = poly_mul_exact(m, e6, (std::size_t)N + 1);
            rows.push_back(std::move(m));
        }
    }
    if ((int)rows.size() < d) throw degenerate_basis_error("victor_miller_basis_big: not enough monomials");

    // Echelonize. The leading d x d block determines the row operations; apply
    // the resulting rational combinations to the full rows, then verify
    // integrality (the Victor-Miller basis is integral).
    std::vector<std::vector<mpq_class>> head((std::size_t)d, std::vector<mpq_class>((std::size_t)d + 1));
    for (int r = 0; r < d; ++r)
        for (long n = 0; n <= d; ++n) head[(std::size_t)r][(std::size_t)n] = mpq_class(rows[(std::size_t)r][(std::size_t)n]);
    // transform matrix: out_r = sum_j t[r][j] * rows[j]
    std::vector<std::vector<mpq_class>> t((std::size_t)d, std::vector<mpq_class>((std::size_t)d, mpq_class(0)));
    for (int r = 0; r < d; ++r) t[(std::size_t)r][(std::size_t)r] = 1;
    for (int pivot = 1; pivot <= d; ++pivot) {
        int sel = -1;
        for (int r = pivot - 1; r < d; ++r)
            if (head[(std::size_t)r][(std::size_t)pivot] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw insufficient_precision_error("victor_miller_basis_big: echelonization failed");
        std::swap(head[(std::size_t)(pivot - 1)], head[(std::size_t)sel]);
        std::swap(t[(std::size_t)(pivot - 1)], t[(std::size_t)sel]);
        mpq_class inv = 1 / head[(std::size_t)(pivot - 1)][(std::size_t)pivot];
        for (auto& x : head[(std::size_t)(pivot - 1)]) x *= inv;
        for (auto& x : t[(std::size_t)(pivot - 1)]) x *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == pivot - 1) continue;
            mpq_class c = head[(std::size_t)r][(std::size_t)pivot];
            if (c == 0) continue;
            for (int n = 0; n <= d; ++n) head[(std::size_t)r][(std::size_t)n] -= c * head[(std::size_t)(pivot - 1)][(std::size_t)n];
            for (int j = 0; j < d; ++j) t[(std::size_t)r][(std::size_t)j] -= c * t[(std::size_t)(pivot - 1)][(std::size_t)j];
        }
    }
    std::vector<std::vector<mpz_class>> out((std::size_t)d);
    for (int r = 0; r < d; ++r) {
        out[(std::size_t)r].assign((std::size_t)N + 1, mpz_class(0));
        for (int j = 0; j < d; ++j) {
            const mpq_class& c = t[(std::size_t)r][(std::size_t)j];
            if (c == 0) continue;
            for (long n = 0; n <= N; ++n) {
                mpq_class v = c * mpq_class(rows[(std::size_t)j][(std::size_t)n]);
                v.canonicalize();
                // accumulate exactly in a temporary rational then fold
                mpq_class cur(out[(std::size_t)r][(std::size_t)n]);
                cur += v;
                cur.canonicalize();
                if (n <= d && cur.get_den() != 1) {
                    // deferred integrality: partial sums may be fractional;
                    // only the final value must be integral, so stash via num/den
                }
                if (j == d - 1 || true) {
                    // store back rationally-exact value when denominator is 1,
                    // else keep fractional representation in a side channel
                }
                if (cur.get_den() == 1)
                    out[(std::size_t)r][(std::size_t)n] = cur.get_num();
                else {
                    // fall back: recompute this entry exactly at the end
                    out[(std::size_t)r][(std::size_t)n] = 0; // placeholder, fixed below
                }
            }
        }
    }
    // The accumulate-in-mpz shortcut above is wrong when intermediate partial
    // sums are fractional; redo entries exactly (row count is tiny, so this
    // simple second pass costs little).
    for (int r = 0; r < d; ++r) {
        for (long n = 0; n <= N; ++n) {
            mpq_class acc(0);
            for (int j = 0; j < d; ++j) {
                if (t[(std::size_t)r][(std::size_t)j] == 0) continue;
                acc += t[(std::size_t)r][(std::size_t)j] * mpq_class(rows[(std::size_t)j][(std::size_t)n]);
            }
            acc.canonicalize();
            if (acc.get_den() != 1)
                throw error("victor_miller_basis_big: non-integral echelon coefficient (internal)");
            out[(std::size_t)r][(std::size_t)n] = acc.get_num();
        }
    }
    return out;
}

} // namespace heckelab
