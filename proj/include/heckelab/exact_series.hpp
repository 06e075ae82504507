#pragma once

// Exact dense polynomial arithmetic for long q-expansions (prime-sum
// experiments need coefficients up to 10^6). Multiplication runs over a few
// 62-bit NTT primes with CRT reconstruction, so products of mpz-coefficient
// series stay exact.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace heckelab {

// c = a * b truncated to out_len coefficients (exact).
std::vector<mpz_class> poly_mul_exact(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b,
                                      std::size_t out_len);

// tau(1..N): coefficients of q * prod (1-q^n)^24, exact, index n holds tau(n)
// (index 0 unused). Built from the sparse Jacobi series for eta^3 by repeated
// squaring with NTT.
std::vector<mpz_class> delta_coefficients_big(long N);

// Raw coefficient arrays a_n (n = 0..N) for the Victor-Miller basis of S_k at
// large truncation, exact. Same echelon normalization as victor_miller_basis.
std::vector<std::vector<mpz_class>> victor_miller_basis_big(int k, long N);

} // namespace heckelab
