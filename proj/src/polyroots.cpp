#include "heckelab/polyroots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

RationalMatrix mat_mul(const RationalMatrix& A, const RationalMatrix& B) {
    std::size_t n = A.size();
    RationalMatrix C(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

mpq_class trace(const RationalMatrix& A) {
    mpq_class t(0);
    for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
    return t;
}

// Evaluate integer poly at rational point, returning sign only.
int sign_at(const std::vector<mpz_class>& p, const mpq_class& x) {
    mpq_class acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + mpq_class(p[i]);
    return sgn(acc);
}

// Polynomial remainder sequence for Sturm (rational arithmetic on mpz polys).
std::vector<std::vector<mpq_class>> sturm_chain(const std::vector<mpz_class>& p) {
    auto to_q = [](const std::vector<mpz_class>& v) {
        std::vector<mpq_class> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = mpq_class(v[i]);
        return r;
    };
    std::vector<std::vector<mpq_class>> chain;
    chain.push_back(to_q(p));
    std::vector<mpq_class> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mpq_class(p[i]) * mpq_class((long)i);
    chain.push_back(d);
    while (chain.back().size() > 1) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        // remainder of a by b, negated
        std::vector<mpq_class> r = a;
        while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
            mpq_class q = r.back() / b.back();
            std::size_t shift = r.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= q * b[i];
            while (r.size() > 1 && r.back() == 0) r.pop_back();
            if (r.size() < b.size()) break;
        }
        for (auto& c : r) c = -c;
        if (r.size() == 1 && r[0] == 0) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes(const std::vector<std::vector<mpq_class>>& chain, const mpq_class& x) {
    int changes = 0, prev = 0;
    for (const auto& poly : chain) {
        mpq_class acc(0);
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
        int s = sgn(acc);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Cauchy root bound: 1 + max |a_i| / |a_n|.
mpq_class cauchy_bound(const std::vector<mpz_class>& p) {
    mpz_class lead = abs(p.back());
    mpz_class m(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, mpz_class(abs(p[i])));
    mpq_class b = mpq_class(m) / mpq_class(lead) + 1;
    return b;
}

} // namespace

std::vector<mpq_class> characteristic_polynomial(const RationalMatrix& A) {
    // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(M_1); M_{j+1} = A (M_j + c_j I).
    std::size_t n = A.size();
    std::vector<mpq_class> c(n + 1, mpq_class(0));
    c[n] = 1;
    RationalMatrix M = A;
    for (std::size_t j = 1; j <= n; ++j) {
        if (j > 1) {
            RationalMatrix Mc = M;
            for (std::size_t i = 0; i < n; ++i) Mc[i][i] += c[n - (j - 1)];
            M = mat_mul(A, Mc);
        }
        c[n - j] = -trace(M) / mpq_class((long)j);
    }
    return c;
}

std::vector<mpz_class> primitive_integer_poly(const std::vector<mpq_class>& p) {
    mpz_class l(1);
    for (const auto& q : p) {
        mpz_class lcm;
        mpz_lcm(lcm.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        l = lcm;
    }
    std::vector<mpz_class> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpq_class v = p[i] * mpq_class(l);
        v.canonicalize();
        r[i] = v.get_num();
    }
    mpz_class g(0);
    for (const auto& z : r) {
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        g = gg;
    }
    if (g > 1)
        for (auto& z : r) z /= g;
    return r;
}

int sturm_count(const std::vector<mpz_class>& p, const mpq_class& a, const mpq_class& b) {
    auto chain = sturm_chain(p);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const std::vector<mpz_class>& p) {
    auto chain = sturm_chain(p);
    auto count = [&chain](const mpq_class& a, const mpq_class& b) {
        return sign_changes(chain, a) - sign_changes(chain, b);
    };
    mpq_class B = cauchy_bound(p);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    std::vector<std::pair<mpq_class, mpq_class>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int c = count(a, b);
        if (c == 0) continue;
        if (c == 1) {
            out.emplace_back(a, b);
            continue;
        }
        mpq_class mid = (a + b) / 2;
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

Real refine_root(const std::vector<mpz_class>& p, mpq_class lo, mpq_class hi) {
    // Exact bisection until the interval is comfortably inside Newton's basin,
    // then Newton iterations with precision headroom.
    int s_hi = sign_at(p, hi);
    if (s_hi == 0) return Real(mpq_class(hi));
    for (int it = 0; it < 80; ++it) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) return Real(mid);
        if (sm == s_hi)
            hi = mid;
        else
            lo = mid;
    }
    Real refined;
    {
        WorkingPrecision guard(WorkingPrecision::get() + 96);
        std::vector<Real> pc(p.size()), dc(p.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i) pc[i] = Real(mpz_class(p[i]));
        for (std::size_t i = 1; i < p.size(); ++i) dc[i - 1] = pc[i] * (long)i;
        auto horner = [](const std::vector<Real>& c, const Real& x) {
            Real acc(0L);
            for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
            return acc;
        };
        Real x = (Real(lo) + Real(hi)) / 2L;
        Real tol = Real::pow2(-(long)WorkingPrecision::get() + 8);
        for (int it = 0; it < 64; ++it) {
            Real fx = horner(pc, x);
            Real dfx = horner(dc, x);
            Real dx = fx / dfx;
            x -= dx;
            if (abs(dx) < abs(x) * tol + tol) break;
        }
        refined = std::move(x);
    }
    return refined.rounded_to_working();
}

int irreducible_factor_degree(const std::vector<mpz_class>& p, const std::vector<Real>& roots,
                              std::size_t root_index) {
    int deg = (int)p.size() - 1;
    if (deg <= 1) return 1;
    if (p.back() != 1) {
        // Hecke characteristic polynomials here are monic; anything else would
        // signal an upstream problem.
        throw invalid_input_error("irreducible_factor_degree: expected monic polynomial");
    }
    // Try all subsets containing the chosen root, smallest first. A subset S
    // gives a candidate factor prod_{r in S} (x - r); if its coefficients are
    // near integers, verify by exact polynomial division.
    std::size_t n = roots.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != root_index) others.push_back(i);

    Real half("0.25");
    for (int size = 1; size <= deg; ++size) {
        // choose size-1 elements from others
        std::vector<int> idx(others.size(), 0);
        std::vector<std::size_t> pick;
        std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int need) -> bool {
            if (need == 0) {
                // build candidate factor
                std::vector<Real> fac{Real(1L)};
                auto mul_linear = [&fac](const Real& r) {
                    std::vector<Real> nf(fac.size() + 1, Real(0L));
                    for (std::size_t i = 0; i < fac.size(); ++i) {
                        nf[i + 1] += fac[i];
                        nf[i] -= fac[i] * r;
                    }
                    fac = std::move(nf);
                };
                mul_linear(roots[root_index]);
                for (auto j : pick) mul_linear(roots[j]);
                // snap to integers
                std::vector<mpz_class> cand(fac.size());
                for (std::size_t i = 0; i < fac.size(); ++i) {
                    Real r = round_nearest(fac[i]);
                    if (abs(fac[i] - r) > half) return false;
                    mpz_class z;
                    mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
                    cand[i] = z;
                }
                // exact division check: p mod cand == 0
                std::vector<mpq_class> rem(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) rem[i] = mpq_class(p[i]);
                while (rem.size() >= cand.size()) {
                    mpq_class q = rem.back() / mpq_class(cand.back());
                    std::size_t shift = rem.size() - cand.size();
                    for (std::size_t i = 0; i < cand.size(); ++i) rem[i + shift] -= q * mpq_class(cand[i]);
                    rem.pop_back();
                }
                for (const auto& c : rem)
                    if (c != 0) return false;
                return true;
            }
            for (std::size_t i = start; i < others.size(); ++i) {
                pick.push_back(others[i]);
                if (rec(i + 1, need - 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(0, size - 1)) return size;
    }
    return deg;
}

} // namespace heckelab
