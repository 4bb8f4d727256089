#pragma once

#include <string>

#include "midext/forms.hpp"
#include "midext/sequences.hpp"

namespace midext {

enum class PointKind { QuotientHyperplane, SubLine };

inline std::string point_kind_name(PointKind k) {
    return k == PointKind::SubLine ? "SubLine" : "QuotientHyperplane";
}

/// A point of P(V) ⊔ P(V^∨): either a sub line N ⊂ V (data r×1) or a
/// quotient line presented by its kernel hyperplane W ⊂ V (data r×(r−1)).
/// Data is kept in reduced column echelon form, so equality of points is
/// literal matrix equality.
template <class F>
struct KleinPoint {
    PointKind kind;
    Mat<F> data;

    bool operator==(const KleinPoint& o) const { return kind == o.kind && data == o.data; }
    bool operator!=(const KleinPoint& o) const { return !(*this == o); }

    std::string kind_name() const { return point_kind_name(kind); }
};

/// The support of a nonzero decomposable 2-vector ω ∈ Λ²k⁴: the unique
/// plane U with ω ∈ Λ²U, computed by contracting ω against the coordinate
/// covectors.  ω is decomposable iff ω∧ω = 0 (the Plücker quadric, i.e.
/// isotropy for the wedge form).
template <class F>
Mat<F> support(const Mat<F>& omega) {
    const F& f = omega.field();
    if (omega.rows() != 6 || omega.cols() != 1) throw dimension_mismatch("2-vector must be 6×1");
    if (omega.is_zero()) throw zero_input("support of the zero 2-vector");
    TwistedForm<F> wedge = middle_exterior_form(f, 4);
    auto plucker = (omega.transpose() * wedge.gram * omega)(0, 0);
    if (!f.is_zero(plucker)) throw not_decomposable("ω∧ω ≠ 0: 2-vector is not decomposable");
    ExteriorBasis pairs(4, 2);
    Mat<F> spanning(f, 4, 4);
    // column i = contraction of ω by e_i^∨: e_a∧e_b ↦ δ_{ia} e_b − δ_{ib} e_a
    for (int idx = 0; idx < pairs.size(); ++idx) {
        auto ab = pairs.elements(idx);
        spanning(ab[1], ab[0]) = spanning(ab[1], ab[0]) + omega(idx, 0);
        spanning(ab[0], ab[1]) = spanning(ab[0], ab[1]) - omega(idx, 0);
    }
    Mat<F> u = column_echelon(spanning);
    if (u.cols() != 2) throw not_decomposable("support is not a plane");
    return u;
}

/// Image of a lagrangian under a change of basis ψ on V, recanonicalized.
template <class F>
Mat<F> transport_lagrangian(const Mat<F>& psi, const Mat<F>& witness, int s) {
    return column_echelon(compound_matrix(psi, s) * witness);
}

/// The inverse of the rank-4 correspondence: a lagrangian of the wedge
/// form on Λ²k⁴ is either Λ²W for a hyperplane W (then the supports of a
/// basis span W and meet pairwise in distinct lines) or N∧V for a line N
/// (then all supports share the line N).  The support intersection
/// recovers the witness subspace, and the claimed type is re-verified by
/// rebuilding the lagrangian from it.
template <class F>
KleinPoint<F> klein_inverse(const Mat<F>& lagr) {
    const F& f = lagr.field();
    TwistedForm<F> wedge = middle_exterior_form(f, 4);
    if (!verify_lagrangian(wedge, lagr)) throw not_lagrangian("not a lagrangian of the wedge form");
    Mat<F> u0 = support(lagr.col(0));
    Mat<F> u1 = support(lagr.col(1));
    Mat<F> u2 = support(lagr.col(2));
    Mat<F> common = intersect_column_spaces(intersect_column_spaces(u0, u1), u2);
    Mat<F> canon = column_echelon(lagr);
    if (common.cols() == 1) {
        Mat<F> rebuilt = column_echelon(wedge_with_vector(common, 2));
        if (rebuilt == canon) return KleinPoint<F>{PointKind::SubLine, common};
    }
    Mat<F> w = column_echelon(Mat<F>::hcat(Mat<F>::hcat(u0, u1), u2));
    if (w.cols() == 3) {
        Mat<F> rebuilt = column_echelon(compound_matrix(w, 2));
        if (rebuilt == canon) return KleinPoint<F>{PointKind::QuotientHyperplane, w};
    }
    throw mixed_type("lagrangian is neither N∧V nor Λ²W — this is a bug");
}

/// The two moduli maps: a line quotient / sub line of V gives a
/// lagrangian of the middle form.  Witnesses are canonicalized, so
/// equivalent data (f vs 2f) give literally equal outputs.
template <class F>
Mat<F> phi(const ShortExactSeq<F>& ses, int s) {
    return column_echelon(lagrangian_from_quotient(ses, s));
}

template <class F>
Mat<F> phi_prime(const ShortExactSeq<F>& ses, int s) {
    return column_echelon(lagrangian_from_subline(ses, s));
}

/// Rebuild the lagrangian a Klein point maps to (rank 4).
template <class F>
Mat<F> lagrangian_of_point(const KleinPoint<F>& pt) {
    if (pt.kind == PointKind::SubLine)
        return column_echelon(wedge_with_vector(pt.data, 2));
    return column_echelon(compound_matrix(pt.data, 2));
}

/// The short exact sequence presentation of a Klein point.
template <class F>
ShortExactSeq<F> sequence_of_point(const KleinPoint<F>& pt) {
    if (pt.kind == PointKind::SubLine) return sequence_from_subline(pt.data);
    // quotient encoded by its kernel hyperplane: recover the covector
    Mat<F> cov = kernel_basis(pt.data.transpose()).transpose();
    return ShortExactSeq<F>{pt.data, cov};
}

/// Two lagrangians of one form lie in the same connected component of the
/// lagrangian grassmannian iff dim(F₁ ∩ F₂) ≡ m (mod 2).
template <class F>
bool same_component(const TwistedForm<F>& form, const Mat<F>& l1, const Mat<F>& l2) {
    if (!verify_lagrangian(form, l1) || !verify_lagrangian(form, l2))
        throw not_lagrangian("component parity needs two lagrangians of the form");
    int m = form.dim() / 2;
    int inter = 2 * m - rank(Mat<F>::hcat(l1, l2));
    return (inter - m) % 2 == 0;
}

/// Parity class of a lagrangian against a fixed reference (Λ² of the
/// standard hyperplane ⟨e₁..e_{r−1}⟩ for the wedge form):
/// (dim(F ∩ F_ref) + m) mod 2, constant on components.
template <class F>
int parity_class(const TwistedForm<F>& form, const Mat<F>& lagr, const Mat<F>& reference) {
    if (!verify_lagrangian(form, lagr) || !verify_lagrangian(form, reference))
        throw not_lagrangian("parity class needs lagrangians");
    int m = form.dim() / 2;
    int inter = 2 * m - rank(Mat<F>::hcat(lagr, reference));
    return (inter + m) % 2;
}

enum class ComponentPrediction { Same, Different };

inline bool is_power_of_two(long long s) { return s > 0 && (s & (s - 1)) == 0; }

/// Whether the quotient-line and sub-line families land in different
/// components of the lagrangian grassmannian of the middle form on a
/// rank-r space.  For odd s the grassmannian is connected; for even s the
/// families split iff s is a power of 2, cross-checked against
/// C(2s,s) ≡ 2 (mod 4).
inline ComponentPrediction component_prediction(int r) {
    if (r < 2 || r % 2 != 0) throw odd_rank("component prediction needs even rank");
    int s = r / 2;
    if (s % 2 != 0) return ComponentPrediction::Same;  // connected (symplectic case)
    bool pow2 = is_power_of_two(s);
    bool mod4 = binomial(r, s) % 4 == 2;
    if (pow2 != mod4) throw error("power-of-2 criterion disagrees with the mod-4 arithmetic");
    return pow2 ? ComponentPrediction::Different : ComponentPrediction::Same;
}

/// Rank-2 correspondence: every line of V is a lagrangian of the
/// alternating form λ¹V, and the map line ↦ line is its own inverse.
template <class F>
Mat<F> rank2_phi(const ShortExactSeq<F>& ses) {
    ses.validate();
    if (ses.ambient_rank() != 2) throw dimension_mismatch("rank-2 correspondence needs r = 2");
    // quotient datum: the lagrangian is ker f = W; sub datum: it is N′.
    // Either way the inclusion column carries it.
    return column_echelon(ses.incl);
}

template <class F>
KleinPoint<F> rank2_inverse(const Mat<F>& line) {
    const F& f = line.field();
    TwistedForm<F> form = middle_exterior_form(f, 2);
    if (!verify_lagrangian(form, line)) throw not_lagrangian("not a line in V");
    return KleinPoint<F>{PointKind::SubLine, column_echelon(line)};
}

} // namespace midext
