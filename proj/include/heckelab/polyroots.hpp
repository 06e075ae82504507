#pragma once

// Exact characteristic polynomials of rational matrices and certified real
// root isolation/refinement for the (squarefree, all-real-roots) polynomials
// arising from Hecke operators at level 1.

#include <gmpxx.h>

#include <vector>

#include "heckelab/real.hpp"

namespace heckelab {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Monic characteristic polynomial det(xI - A), coefficients low..high.
std::vector<mpq_class> characteristic_polynomial(const RationalMatrix& A);

// Clear denominators and divide by content; preserves roots.
std::vector<mpz_class> primitive_integer_poly(const std::vector<mpq_class>& p);

// Number of distinct real roots in (a, b] via Sturm sequence.
int sturm_count(const std::vector<mpz_class>& p, const mpq_class& a, const mpq_class& b);

// Isolating intervals (a_i, b_i] for all distinct real roots, ascending.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const std::vector<mpz_class>& p);

// Refine an isolated root by exact bisection + Newton to ~working precision,
// with internal precision headroom.
Real refine_root(const std::vector<mpz_class>& p, mpq_class lo, mpq_class hi);

// Degree of the irreducible factor (over Q) of the monic squarefree integer
// polynomial p containing the root approximated by r. Uses subset products of
// the high-precision roots snapped to integer coefficients, verified by exact
// division; complete for deg(p) <= 5 (Gauss' lemma: factors are integral).
int irreducible_factor_degree(const std::vector<mpz_class>& p, const std::vector<Real>& all_roots,
                              std::size_t root_index);

} // namespace heckelab
