#include "heckelab/numutil.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace heckelab {

const mpq_class& bernoulli_number(int n) {
    static std::vector<mpq_class> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if ((int)cache.size() > n) return cache[(std::size_t)n];
    if (cache.empty()) cache.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
    for (int m = (int)cache.size(); m <= n; ++m) {
        mpq_class s(0);
        for (int j = 0; j < m; ++j) {
            mpq_class t(binomial_mpz((unsigned long)m + 1, (unsigned long)j));
            s += t * cache[(std::size_t)j];
        }
        mpq_class bm = -s / mpq_class(mpz_class((long)m + 1));
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache[(std::size_t)n];
}

mpz_class factorial_mpz(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::uint32_t root = 1;
    while ((std::uint64_t)(root + 1) * (root + 1) <= n) ++root;
    std::vector<bool> small(root + 1, true);
    for (std::uint32_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = (std::uint64_t)i * i; j <= root; j += i) small[(std::size_t)j] = false;
    }
    std::vector<std::uint32_t> base = primes;
    const std::uint32_t seg = 1u << 16;
    std::vector<bool> block(seg);
    for (std::uint64_t lo = (std::uint64_t)root + 1; lo <= n; lo += seg) {
        std::uint64_t hi = std::min<std::uint64_t>(lo + seg - 1, n);
        std::fill(block.begin(), block.end(), true);
        for (std::uint32_t p : base) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            for (std::uint64_t j = start; j <= hi; j += p) block[(std::size_t)(j - lo)] = false;
        }
        for (std::uint64_t j = lo; j <= hi; ++j)
            if (block[(std::size_t)(j - lo)]) primes.push_back((std::uint32_t)j);
    }
    return primes;
}

long divisor_count(long n) {
    long cnt = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) cnt += (d * d == n) ? 1 : 2;
    }
    return cnt;
}

std::vector<mpz_class> sigma_sieve(long N, int e) {
    std::vector<mpz_class> s((std::size_t)N + 1, mpz_class(0));
    for (long d = 1; d <= N; ++d) {
        mpz_class de;
        mpz_ui_pow_ui(de.get_mpz_t(), (unsigned long)d, (unsigned long)e);
        for (long m = d; m <= N; m += d) s[(std::size_t)m] += de;
    }
    return s;
}

std::int64_t gcd_int64(std::int64_t a, std::int64_t b) {
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

namespace {

// Legendre P_n and derivative at x, by recurrence.
void legendre_pair(int n, const Real& x, Real& p, Real& dp) {
    Real p0(1L), p1 = x;
    for (int j = 2; j <= n; ++j) {
        Real p2 = (Real(2L * j - 1) * x * p1 - Real((long)j - 1) * p0) / (long)j;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    Real den = x * x - Real(1L);
    dp = Real((long)n) * (x * p1 - p0) / den;
}

} // namespace

const GaussLegendre& gauss_legendre(int order) {
    static std::map<std::pair<int, mpfr_prec_t>, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(order, WorkingPrecision::get());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.nodes.resize((std::size_t)order);
    gl.weights.resize((std::size_t)order);
    Real pi = Real::pi();
    Real tol = Real::pow2(-(long)WorkingPrecision::get() + 6);
    for (int i = 0; i < order; ++i) {
        // Chebyshev-based initial guess, then Newton.
        Real x = cos(pi * (Real(4L * i + 3)) / Real(4L * order + 2));
        for (int it2 = 0; it2 < 200; ++it2) {
            Real p, dp;
            legendre_pair(order, x, p, dp);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        Real p, dp;
        legendre_pair(order, x, p, dp);
        gl.nodes[(std::size_t)i] = x;
        gl.weights[(std::size_t)i] = Real(2L) / ((Real(1L) - x * x) * dp * dp);
    }
    return cache.emplace(key, std::move(gl)).first->second;
}

void ChebSeries::compute_coeffs(const std::vector<Real>& vals) {
    // Type-I DCT at Lobatto points, direct O(n^2); fit sizes here are small.
    int n = (int)vals.size() - 1;
    coef_.assign((std::size_t)n + 1, Real(0L));
    Real pi = Real::pi();
    for (int k = 0; k <= n; ++k) {
        Real s(0L);
        for (int j = 0; j <= n; ++j) {
            Real term = vals[(std::size_t)j] * cos(pi * Real((long)k * j) / (long)n);
            if (j == 0 || j == n) term = term / 2L;
            s += term;
        }
        coef_[(std::size_t)k] = s * Real(2L) / (long)n;
    }
    coef_[0] = coef_[0] / 2L;
    coef_[(std::size_t)n] = coef_[(std::size_t)n] / 2L;
}

Real ChebSeries::eval(const Real& t) const {
    // Clenshaw
    Real x = (Real(2L) * t - a_ - b_) / (b_ - a_);
    Real two_x = Real(2L) * x;
    Real b1(0L), b2(0L);
    for (std::size_t k = coef_.size(); k-- > 1;) {
        Real b0 = coef_[k] + two_x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coef_[0] + x * b1 - b2;
}

ChebSeries ChebSeries::derivative() const {
    ChebSeries d;
    d.a_ = a_;
    d.b_ = b_;
    std::size_t n = coef_.size();
    d.coef_.assign(n, Real(0L));
    if (n <= 1) return d;
    // standard backward recurrence for Chebyshev derivative coefficients
    std::vector<Real> c((std::size_t)n + 2, Real(0L));
    for (std::size_t k = n - 1; k >= 1; --k) {
        c[k - 1] = c[k + 1] + Real(2L * (long)k) * coef_[k];
        if (k == 1) break;
    }
    c[0] = c[0] / 2L;
    Real scale = Real(2L) / (b_ - a_);
    for (std::size_t k = 0; k < n; ++k) d.coef_[k] = c[k] * scale;
    return d;
}

} // namespace heckelab
