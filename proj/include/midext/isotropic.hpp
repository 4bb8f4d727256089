#pragma once

#include <gmpxx.h>

#include <vector>

#include "midext/forms.hpp"
#include "midext/fp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace midext {

/// Number of k-dimensional subspaces of F_q^n.
inline mpz_class gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) return 0;
    mpz_class num = 1, den = 1, qz(static_cast<long>(q));
    for (int i = 0; i < k; ++i) {
        mpz_class qn, qd;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(i + 1));
        num *= qn - 1;
        den *= qd - 1;
    }
    return num / den;
}

namespace detail {

// Every m-dimensional subspace of F_p^n has a unique reduced column
// echelon basis: pivot rows r_1 < … < r_m, column j with a 1 at r_j,
// zeros above it and at the other pivot rows, arbitrary entries below.
// Enumerating those bases walks each subspace exactly once.
struct EchelonShape {
    std::vector<int> pivots;                    // r_1 < … < r_m
    std::vector<std::pair<int, int>> free_pos;  // (row, col) of free entries
};

inline std::vector<EchelonShape> echelon_shapes(int n, int m) {
    std::vector<EchelonShape> shapes;
    if (m < 0 || m > n) return shapes;
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i;
    while (true) {
        EchelonShape sh;
        sh.pivots = c;
        std::vector<bool> is_pivot(n, false);
        for (int r : c) is_pivot[r] = true;
        for (int j = 0; j < m; ++j)
            for (int i = c[j] + 1; i < n; ++i)
                if (!is_pivot[i]) sh.free_pos.push_back({i, j});
        shapes.push_back(std::move(sh));
        int i = m - 1;
        while (i >= 0 && c[i] == n - m + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    }
    return shapes;
}

// Collect the isotropic subspaces of one echelon shape, in odometer order
// over the free entries.  Raw int64 arithmetic: this is the hot loop.
inline void isotropic_in_shape(const std::vector<long long>& gram, int n, int m, long long p,
                               const EchelonShape& sh, std::vector<std::vector<long long>>& out) {
    std::vector<long long> x(static_cast<size_t>(n) * m, 0);
    for (int j = 0; j < m; ++j) x[static_cast<size_t>(sh.pivots[j]) * m + j] = 1;
    size_t nfree = sh.free_pos.size();
    std::vector<long long> digits(nfree, 0);
    while (true) {
        // isotropy: x_aᵀ G x_b = 0 for all a <= b
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a; b < m && ok; ++b) {
                long long acc = 0;
                for (int i = 0; i < n; ++i) {
                    long long xa = x[static_cast<size_t>(i) * m + a];
                    if (xa == 0) continue;
                    long long row = 0;
                    for (int k = 0; k < n; ++k)
                        row += gram[static_cast<size_t>(i) * n + k] * x[static_cast<size_t>(k) * m + b] % p;
                    acc += xa * (row % p) % p;
                }
                if (acc % p != 0) ok = false;
            }
        if (ok) out.push_back(x);
        // next odometer state
        size_t d = 0;
        while (d < nfree) {
            auto [i, j] = sh.free_pos[d];
            long long v = x[static_cast<size_t>(i) * m + j] + 1;
            if (v < p) {
                x[static_cast<size_t>(i) * m + j] = v;
                break;
            }
            x[static_cast<size_t>(i) * m + j] = 0;
            ++d;
        }
        if (d == nfree) break;
    }
}

} // namespace detail

/// Exhaustive list of the maximal (rank n/2) totally isotropic subspaces
/// of a regular form over F_p, one reduced-column-echelon witness per
/// subspace, in a deterministic order.  The enumeration is split across
/// echelon shapes; shapes are independent, so the parallel path simply
/// distributes them and concatenates in shape order, reproducing the
/// serial output exactly.
inline std::vector<Mat<FpField>> brute_force_lagrangians(const TwistedForm<FpField>& form,
                                                         long long budget = 100000,
                                                         Parallel mode = Parallel::Auto) {
    const FpField& f = form.field();
    int n = form.dim();
    if (n % 2 != 0) throw odd_rank("lagrangians need even rank");
    int m = n / 2;
    mpz_class total = gaussian_binomial(n, m, f.p);
    if (total > mpz_class(static_cast<long>(budget)))
        throw budget_exceeded("enumeration space " + total.get_str() + " exceeds budget " +
                              std::to_string(budget));
    std::vector<long long> gram(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[static_cast<size_t>(i) * n + j] = form.gram(i, j).value();
    auto shapes = detail::echelon_shapes(n, m);
    std::vector<std::vector<std::vector<long long>>> per_shape(shapes.size());
    bool parallel = mode == Parallel::ForceParallel || (mode == Parallel::Auto && total > mpz_class(4096));
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (size_t si = 0; si < shapes.size(); ++si)
            detail::isotropic_in_shape(gram, n, m, f.p, shapes[si], per_shape[si]);
#endif
    } else {
        for (size_t si = 0; si < shapes.size(); ++si)
            detail::isotropic_in_shape(gram, n, m, f.p, shapes[si], per_shape[si]);
    }
    std::vector<Mat<FpField>> out;
    for (const auto& bucket : per_shape)
        for (const auto& flat : bucket) {
            Mat<FpField> w(f, n, m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) w(i, j) = Fp(flat[static_cast<size_t>(i) * m + j], f.p);
            out.push_back(std::move(w));
        }
    return out;
}

inline std::vector<Mat<FpField>> brute_force_lagrangians_serial(const TwistedForm<FpField>& form,
                                                                long long budget = 100000) {
    return brute_force_lagrangians(form, budget, Parallel::Serial);
}

} // namespace midext
