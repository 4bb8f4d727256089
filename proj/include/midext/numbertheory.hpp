#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "midext/fp.hpp"
#include "midext/rational.hpp"

namespace midext {

/// Trial-division factorization; fine for the desk-scale inputs the
/// square-class and Hasse computations see.
std::vector<std::pair<mpz_class, int>> factor(mpz_class n);

/// The unique squarefree integer d with a ∈ d·(Q*)².  Throws zero_input
/// on 0 and overflow-guards the (never large in practice) result.
long long square_class(const Rational& a);

/// Legendre symbol (a/p) for odd prime p; a not divisible by p.
int legendre(const mpz_class& a, long long p);

/// Hilbert symbol (a,b)_p at a finite prime p, or at the real place for
/// p = 0.  Standard tame/dyadic formulas.
int hilbert_symbol(const Rational& a, const Rational& b, long long p);

/// Finite primes where (a,b)_p could be nontrivial: 2 and everything
/// dividing the numerators/denominators.
std::vector<long long> hilbert_support(const Rational& a, const Rational& b);

} // namespace midext
