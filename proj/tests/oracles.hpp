// Independent oracles used to freeze expected values.  Everything here is
// deliberately naive and shares no code path with the library routines it
// cross-checks.
#pragma once

#include <vector>

#include "midext/matrix.hpp"
#include "midext/rational.hpp"

namespace oracles {

// Cofactor-expansion determinant (exponential; fine for n <= 8).
template <class F>
typename F::Elem naive_det(const midext::Mat<F>& a) {
    const F& f = a.field();
    int n = a.rows();
    if (n == 0) return f.one();
    if (n == 1) return a(0, 0);
    auto acc = f.zero();
    for (int j = 0; j < n; ++j) {
        if (f.is_zero(a(0, j))) continue;
        std::vector<int> rows, cols;
        for (int i = 1; i < n; ++i) rows.push_back(i);
        for (int k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        auto minor = naive_det(a.submatrix(rows, cols));
        auto term = a(0, j) * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Solvability oracle for the Hilbert symbol at an odd prime p: (a,b)_p = 1
// iff z^2 = a x^2 + b y^2 has a primitive solution mod p^3.  Valid for
// integer a, b with p-adic valuation at most 1 (enough for the frozen
// examples it pins).
inline int hilbert_by_search(long long a, long long b, long long p) {
    long long mod = p * p * p;
    auto norm = [&](long long x) { return ((x % mod) + mod) % mod; };
    for (long long x = 0; x < mod; ++x)
        for (long long y = 0; y < mod; ++y) {
            long long rhs = norm(a * x % mod * x % mod + b * y % mod * y % mod);
            for (long long z = 0; z < mod; ++z) {
                if (norm(z * z) != rhs) continue;
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                return 1;
            }
        }
    return -1;
}

// Count of lagrangians of a hyperbolic form of rank 6 over F_q, from the
// standard orbit count for split orthogonal groups.
inline long long split_rank6_lagrangian_count(long long q) { return 2 * (q + 1) * (q * q + 1); }

} // namespace oracles
