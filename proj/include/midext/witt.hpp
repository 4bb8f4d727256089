#pragma once

#include <map>
#include <vector>

#include "midext/forms.hpp"
#include "midext/fp.hpp"
#include "midext/numbertheory.hpp"
#include "midext/rational.hpp"

namespace midext {

/// Orthogonal diagonalization of a regular symmetric form (char ≠ 2).
/// Returns the diagonal entries.
template <class F>
std::vector<typename F::Elem> diagonalize(const TwistedForm<F>& form) {
    const F& f = form.field();
    if (form.epsilon != 1) throw irregular_form("diagonalization applies to symmetric forms");
    if (!form.is_regular()) throw irregular_form("diagonalizing an irregular form");
    Mat<F> g = form.gram;
    int n = g.rows();
    std::vector<typename F::Elem> out;
    std::vector<int> live;
    for (int i = 0; i < n; ++i) live.push_back(i);
    while (!live.empty()) {
        // find a nonzero diagonal entry; if none, create one (char != 2)
        int pick = -1;
        for (size_t a = 0; a < live.size(); ++a)
            if (!f.is_zero(g(live[a], live[a]))) { pick = static_cast<int>(a); break; }
        if (pick < 0) {
            bool fixed = false;
            for (size_t a = 0; a < live.size() && !fixed; ++a)
                for (size_t b = a + 1; b < live.size() && !fixed; ++b) {
                    int i = live[a], j = live[b];
                    if (f.is_zero(g(i, j))) continue;
                    for (int k = 0; k < n; ++k) g(i, k) = g(i, k) + g(j, k);
                    for (int k = 0; k < n; ++k) g(k, i) = g(k, i) + g(k, j);
                    pick = static_cast<int>(a);
                    fixed = true;
                }
            if (!fixed) throw irregular_form("zero block in a supposedly regular form");
        }
        int i = live[static_cast<size_t>(pick)];
        auto d = g(i, i);
        out.push_back(d);
        auto dinv = f.one() / d;
        // clear row/column i against the remaining block
        for (int idx : live) {
            if (idx == i) continue;
            auto c = g(idx, i) * dinv;
            if (f.is_zero(c)) continue;
            for (int k = 0; k < n; ++k) g(idx, k) = g(idx, k) - c * g(i, k);
            for (int k = 0; k < n; ++k) g(k, idx) = g(k, idx) - c * g(k, i);
        }
        live.erase(live.begin() + pick);
    }
    return out;
}

/// Complete isometry invariants of a regular symmetric form over Q:
/// dimension, real signature, signed discriminant square class, and the
/// Hasse symbols.  Convention: hasse_p = ∏_{i<j} (d_i, d_j)_p over a
/// diagonalization; only primes with symbol −1 are stored.
struct WittInvariantsQ {
    int dim = 0;
    int signature = 0;
    long long disc = 1;
    std::map<long long, int> hasse;  // finite primes with symbol −1

    bool operator==(const WittInvariantsQ& o) const {
        return dim == o.dim && signature == o.signature && disc == o.disc && hasse == o.hasse;
    }
};

inline int hasse_symbol_of_diagonal(const std::vector<Rational>& d, long long p) {
    int h = 1;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], p);
    return h;
}

inline WittInvariantsQ witt_invariants_q(const TwistedForm<QField>& form) {
    auto d = diagonalize(form);
    WittInvariantsQ inv;
    inv.dim = static_cast<int>(d.size());
    for (const auto& x : d) inv.signature += x.sign();
    Rational prod(1L);
    for (const auto& x : d) prod = prod * x;
    if (inv.dim % 2 == 0 && (inv.dim / 2) % 2 != 0) prod = -prod;
    inv.disc = square_class(prod);
    std::vector<long long> support{2};
    for (const auto& x : d)
        for (long long p : hilbert_support(x, x))
            if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
    for (long long p : support)
        if (hasse_symbol_of_diagonal(d, p) == -1) inv.hasse[p] = -1;
    return inv;
}

/// Invariants of the split form H(Q^m) = ⟨1,−1⟩^m, for comparison.
inline WittInvariantsQ hyperbolic_invariants_q(int half_rank) {
    WittInvariantsQ inv;
    inv.dim = 2 * half_rank;
    long long pairs = static_cast<long long>(half_rank) * (half_rank - 1) / 2;
    // (−1,−1)_2 = −1 contributes once per pair of −1 entries
    if (pairs % 2 != 0) inv.hasse[2] = -1;
    return inv;
}

inline bool is_hyperbolic_q(const TwistedForm<QField>& form) {
    if (form.dim() % 2 != 0) return false;
    if (form.epsilon == -1) return form.is_regular();  // symplectic: rank decides
    return witt_invariants_q(form) == hyperbolic_invariants_q(form.dim() / 2);
}

inline bool is_isometric_q(const TwistedForm<QField>& f1, const TwistedForm<QField>& f2) {
    if (f1.epsilon != f2.epsilon) return false;
    if (f1.epsilon == -1) {
        if (!f1.is_regular() || !f2.is_regular()) throw irregular_form("isometry test needs regular forms");
        return f1.dim() == f2.dim();
    }
    return witt_invariants_q(f1) == witt_invariants_q(f2);
}

/// Over a finite field of odd characteristic a regular symmetric form is
/// hyperbolic iff it has even rank and trivial signed discriminant.
inline bool is_hyperbolic_fp(const TwistedForm<FpField>& form) {
    if (form.dim() % 2 != 0) return false;
    if (!form.is_regular()) return false;
    if (form.epsilon == -1) return true;
    return form.field().is_square(signed_discriminant_value(form));
}

} // namespace midext
