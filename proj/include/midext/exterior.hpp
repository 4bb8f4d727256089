#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "midext/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace midext {

/// Basis bookkeeping for Λ^s of a rank-r space: the s-element subsets of
/// {1..r} in lexicographic order of their sorted element lists, encoded as
/// bitmasks (bit i−1 for element i).  All wedge signs in the library are
/// shuffle parities relative to this order.
class ExteriorBasis {
public:
    ExteriorBasis(int r, int s);

    int r() const { return r_; }
    int s() const { return s_; }
    int size() const { return static_cast<int>(masks_.size()); }
    uint32_t mask(int idx) const { return masks_[idx]; }
    int index(uint32_t mask) const;
    std::vector<int> elements(int idx) const;  // 0-based positions, ascending
    std::string label(int idx) const;          // e.g. "e{1,3}"

private:
    int r_, s_;
    std::vector<uint32_t> masks_;
    std::unordered_map<uint32_t, int> index_;
};

long long binomial(int n, int k);

/// Sign of the shuffle merging the sorted lists S then T into one sorted
/// list; 0 when they overlap.  This is the coefficient of e_{S∪T} in
/// e_S ∧ e_T.
int wedge_sign(uint32_t s_mask, uint32_t t_mask);

/// Coefficient of e_{S∪{i}} in e_i ∧ e_S (0-based i).
int insert_sign(int i, uint32_t s_mask);

enum class Parallel { Auto, Serial, ForceParallel };

/// s-th compound matrix: entry (S,T) is the minor of A on rows S, columns
/// T.  Rectangular inputs are allowed; Cauchy–Binet makes the construction
/// functorial.  Entries are independent minors, so the parallel path just
/// splits them across threads; the serial path is kept as the reference.
template <class F>
Mat<F> compound_matrix(const Mat<F>& a, int s, Parallel mode = Parallel::Auto) {
    if (s < 0) throw dimension_mismatch("negative compound degree");
    // s beyond a dimension gives a legal empty shape (Λ^s of a smaller space is 0)
    ExteriorBasis rows(a.rows(), s), cols(a.cols(), s);
    Mat<F> m(a.field(), rows.size(), cols.size());
    const long long work = static_cast<long long>(rows.size()) * cols.size();
    bool parallel = mode == Parallel::ForceParallel || (mode == Parallel::Auto && work >= 512);
#ifndef _OPENMP
    parallel = false;
#endif
    auto entry = [&](int i, int j) {
        return det(a.submatrix(rows.elements(i), cols.elements(j)));
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic, 16)
        for (int i = 0; i < rows.size(); ++i)
            for (int j = 0; j < cols.size(); ++j) m(i, j) = entry(i, j);
#endif
    } else {
        for (int i = 0; i < rows.size(); ++i)
            for (int j = 0; j < cols.size(); ++j) m(i, j) = entry(i, j);
    }
    return m;
}

template <class F>
Mat<F> compound_matrix_serial(const Mat<F>& a, int s) {
    return compound_matrix(a, s, Parallel::Serial);
}

/// Contraction against a covector f (given as a 1×r matrix):
/// Λ^s V → Λ^{s−1} V, e_S ↦ Σ_k (−1)^{k−1} f(i_k) e_{S∖i_k} for
/// S = {i_1 < … < i_s}.  Composing two contractions is zero.
template <class F>
Mat<F> contraction_matrix(const Mat<F>& f_row, int s) {
    if (f_row.rows() != 1) throw dimension_mismatch("contraction covector must be 1×r");
    if (s < 1) throw dimension_mismatch("contraction needs s >= 1");
    const F& f = f_row.field();
    int r = f_row.cols();
    ExteriorBasis dom(r, s), cod(r, s - 1);
    Mat<F> m(f, cod.size(), dom.size());
    for (int j = 0; j < dom.size(); ++j) {
        auto elems = dom.elements(j);
        int sign = 1;
        for (int k = 0; k < s; ++k) {
            uint32_t rest = dom.mask(j) & ~(1u << elems[k]);
            int i = cod.index(rest);
            m(i, j) += f.from_int(sign) * f_row(0, elems[k]);
            sign = -sign;
        }
    }
    return m;
}

/// Wedging with a fixed vector n: Λ^{s−1} V → Λ^s V,
/// e_S ↦ Σ_{i∉S} n_i · (sign of inserting i) · e_{S∪{i}}.
template <class F>
Mat<F> wedge_with_vector(const Mat<F>& n_col, int s) {
    if (n_col.cols() != 1) throw dimension_mismatch("wedge vector must be r×1");
    if (s < 1) throw dimension_mismatch("wedge target degree must be >= 1");
    const F& f = n_col.field();
    int r = n_col.rows();
    ExteriorBasis dom(r, s - 1), cod(r, s);
    Mat<F> m(f, cod.size(), dom.size());
    for (int j = 0; j < dom.size(); ++j) {
        uint32_t smask = dom.mask(j);
        for (int i = 0; i < r; ++i) {
            if (smask & (1u << i)) continue;
            int idx = cod.index(smask | (1u << i));
            m(idx, j) += f.from_int(insert_sign(i, smask)) * n_col(i, 0);
        }
    }
    return m;
}

/// The r-truncated Koszul complex of a covector f : V → N,
///   0 → Λ^r V → N⊗Λ^{r−1}V → … → N^{r−1}⊗V → N^r → 0.
/// differentials[k] is the map out of the Λ^{r−k} term (i.e. d^(j) for
/// j = r−1 down to 0); twist_exponents[k] is the power of N carried by
/// the k-th term, terms listed from Λ^r down to Λ^0.
template <class F>
struct KoszulComplex {
    int r;
    Mat<F> f_row;
    std::vector<Mat<F>> differentials;
    std::vector<int> twist_exponents;

    /// dimension of the k-th term (k = 0 is Λ^r)
    int term_dim(int k) const { return static_cast<int>(binomial(r, r - k)); }

    bool is_complex() const {
        for (size_t k = 0; k + 1 < differentials.size(); ++k)
            if (!(differentials[k + 1] * differentials[k]).is_zero()) return false;
        return true;
    }

    /// Exact in every degree, including injectivity at Λ^r and
    /// surjectivity onto N^r; holds iff f ≠ 0.
    bool is_exact() const {
        std::vector<int> rk;
        for (const auto& d : differentials) rk.push_back(rank(d));
        for (int k = 0; k <= r; ++k) {
            int in = (k == 0) ? 0 : rk[k - 1];
            int out = (k == r) ? 0 : rk[k];
            if (in + out != term_dim(k)) return false;
        }
        return true;
    }
};

template <class F>
KoszulComplex<F> koszul_complex(const Mat<F>& f_row) {
    if (f_row.rows() != 1) throw dimension_mismatch("Koszul cosection must be 1×r");
    int r = f_row.cols();
    KoszulComplex<F> k{r, f_row, {}, {}};
    for (int j = r - 1; j >= 0; --j) k.differentials.push_back(contraction_matrix(f_row, j + 1));
    for (int deg = r; deg >= 0; --deg) k.twist_exponents.push_back(r - deg);
    return k;
}

/// Symmetric isomorphism Φ : K(V,f) → K(V,f)^♯ built from the perfect
/// pairings Λ^j ⊗ Λ^{r−j} → det V.
///
/// Conventions (pinned here and by the tests, not by outside sources):
///   * phi[j] has entry (T, S) = σ_j · wedge_sign(S, T), a map from the
///     Λ^j term to the dual of the Λ^{r−j} term;
///   * the dual complex differential is (d^♯)_j = −(d_{r+1−j})ᵀ;
///   * σ_j = (−1)^{j(j+1)/2}, globally rescaled so that σ_{r/2} = +1 when
///     r is even — the middle block is then literally the adjoint of the
///     middle exterior power form.
/// With these choices every square commutes (⟨ι_f α, β⟩ =
/// (−1)^{j+1}⟨α, ι_f β⟩ forces σ_{j−1}/σ_j = (−1)^j) and
/// Φ_{r−j}ᵀ = (−1)^{r(r+1)/2} Φ_j.
template <class F>
struct KoszulDuality {
    int r;
    std::vector<Mat<F>> phi;  // phi[j] : Λ^j → (Λ^{r−j})^∨, j = 0..r
    std::vector<int> sigma;
};

template <class F>
KoszulDuality<F> koszul_duality_phi(const Mat<F>& f_row) {
    if (f_row.rows() != 1) throw dimension_mismatch("Koszul cosection must be 1×r");
    const F& f = f_row.field();
    int r = f_row.cols();
    int global = 1;
    if (r % 2 == 0) {
        int s = r / 2;
        global = ((s * (s + 1) / 2) % 2 == 0) ? 1 : -1;
    }
    KoszulDuality<F> kd{r, {}, {}};
    for (int j = 0; j <= r; ++j) {
        int sigma = ((j * (j + 1) / 2) % 2 == 0 ? 1 : -1) * global;
        kd.sigma.push_back(sigma);
        ExteriorBasis dom(r, j), cod(r, r - j);
        Mat<F> p(f, cod.size(), dom.size());
        for (int t = 0; t < cod.size(); ++t)
            for (int s2 = 0; s2 < dom.size(); ++s2)
                p(t, s2) = f.from_int(sigma * wedge_sign(dom.mask(s2), cod.mask(t)));
        kd.phi.push_back(p);
    }
    // Part of the construction contract: verify commutation and symmetry,
    // and that each block is invertible.
    for (int j = 1; j <= r; ++j) {
        Mat<F> lhs = kd.phi[j - 1] * contraction_matrix(f_row, j);
        Mat<F> rhs = -(contraction_matrix(f_row, r + 1 - j).transpose()) * kd.phi[j];
        if (lhs != rhs) throw sign_convention_failure("Koszul duality square failed to commute");
    }
    int tau = ((r * (r + 1) / 2) % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= r; ++j) {
        Mat<F> sym = kd.phi[r - j].transpose();
        Mat<F> expect = (tau == 1) ? kd.phi[j] : -kd.phi[j];
        if (sym != expect) throw sign_convention_failure("Koszul duality symmetry failed");
        if (rank(kd.phi[j]) != kd.phi[j].rows()) throw sign_convention_failure("Koszul duality block not invertible");
    }
    return kd;
}

} // namespace midext
