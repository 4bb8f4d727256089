#pragma once

#include "midext/exterior.hpp"
#include "midext/matrix.hpp"

namespace midext {

/// A two-step exact sequence of free modules 0 → A → V → B → 0 given by
/// the inclusion and projection matrices.  The inputs the library cares
/// about come in two flavours: line quotient 0 → W → V → N → 0 (proj is
/// 1×r) and line sub 0 → N′ → V → W′ → 0 (incl is r×1); the Pascal
/// construction produces general ranks.
template <class F>
struct ShortExactSeq {
    Mat<F> incl;
    Mat<F> proj;

    int ambient_rank() const { return incl.rows(); }
    bool is_line_quotient() const { return proj.rows() == 1; }
    bool is_line_sub() const { return incl.cols() == 1; }

    void validate() const {
        if (incl.rows() != proj.cols() || incl.cols() + proj.rows() != incl.rows())
            throw not_exact("sequence ranks do not add up");
        if (!(proj * incl).is_zero()) throw not_exact("composite is not zero");
        if (rank(incl) != incl.cols()) throw not_exact("inclusion is not injective");
        if (rank(proj) != proj.rows()) throw not_exact("projection is not surjective");
    }
};

/// 0 → ker f → V → N → 0 from a surjective covector f (1×r).
template <class F>
ShortExactSeq<F> sequence_from_quotient(const Mat<F>& f_row) {
    if (f_row.rows() != 1) throw dimension_mismatch("quotient datum must be 1×r");
    if (f_row.is_zero()) throw not_exact("zero covector is not an epimorphism");
    return ShortExactSeq<F>{kernel_basis(f_row), f_row};
}

/// 0 → N′ → V → V/N′ → 0 from an injective column (r×1).
template <class F>
ShortExactSeq<F> sequence_from_subline(const Mat<F>& n_col) {
    if (n_col.cols() != 1) throw dimension_mismatch("sub-line datum must be r×1");
    if (n_col.is_zero()) throw not_exact("zero column is not injective");
    return ShortExactSeq<F>{n_col, kernel_basis(n_col.transpose()).transpose()};
}

/// Pascal's rule as an exact sequence: a line quotient 0 → W → V → N → 0
/// induces 0 → Λ^s W → Λ^s V → N ⊗ Λ^{s−1} W → 0, where the projection is
/// the contraction corestricted to the Λ^{s−1}W basis.  The rank identity
/// C(r,s) = C(r−1,s) + C(r−1,s−1) is re-verified on the output.
template <class F>
ShortExactSeq<F> pascal_sequence(const ShortExactSeq<F>& ses, int s) {
    ses.validate();
    if (!ses.is_line_quotient()) throw not_exact("expected a line-quotient sequence");
    if (s < 1 || s > ses.ambient_rank()) throw dimension_mismatch("Pascal degree out of range");
    Mat<F> incl_out = compound_matrix(ses.incl, s);
    auto proj_out = solve(compound_matrix(ses.incl, s - 1), contraction_matrix(ses.proj, s));
    if (!proj_out) throw not_exact("contraction image does not lie in Λ^{s−1}W");
    ShortExactSeq<F> out{incl_out, *proj_out};
    out.validate();
    return out;
}

/// The dual construction: a line sub 0 → N′ → V → W′ → 0 induces
/// 0 → N′ ⊗ Λ^{s−1} W′ → Λ^s V → Λ^s W′ → 0.  The inclusion wedges N′
/// against any lift of Λ^{s−1} W′; the product is lift-independent.
template <class F>
ShortExactSeq<F> dual_pascal_sequence(const ShortExactSeq<F>& ses, int s) {
    ses.validate();
    if (!ses.is_line_sub()) throw not_exact("expected a line-sub sequence");
    if (s < 1 || s > ses.ambient_rank()) throw dimension_mismatch("Pascal degree out of range");
    const F& f = ses.incl.field();
    auto section = solve(ses.proj, Mat<F>::identity(f, ses.proj.rows()));
    if (!section) throw not_exact("projection admits no section");
    Mat<F> incl_out = wedge_with_vector(ses.incl, s) * compound_matrix(*section, s - 1);
    Mat<F> proj_out = compound_matrix(ses.proj, s);
    ShortExactSeq<F> out{incl_out, proj_out};
    out.validate();
    return out;
}

} // namespace midext
