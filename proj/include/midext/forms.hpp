#pragma once

#include <optional>
#include <string>

#include "midext/exterior.hpp"
#include "midext/matrix.hpp"
#include "midext/sequences.hpp"
#include "midext/twist.hpp"

namespace midext {

/// An ε-symmetric bilinear form with a formal value-line-bundle tag, a
/// homological degree tag, and an optional orientation witness (a square
/// root of the signed discriminant; +1 on the standard middle exterior
/// basis).
template <class F>
struct TwistedForm {
    Mat<F> gram;
    int epsilon = 1;  // +1 symmetric, −1 alternating
    Twist twist;
    int shift = 0;
    std::optional<typename F::Elem> orientation;

    const F& field() const { return gram.field(); }
    int dim() const { return gram.rows(); }

    bool shape_ok() const {
        if (gram.rows() != gram.cols()) return false;
        return gram.transpose() == (epsilon == 1 ? gram : -gram);
    }
    bool is_regular() const { return !field().is_zero(det(gram)); }
};

template <class F>
using LagrangianWitness = Mat<F>;  // n×m inclusion, columns a basis

/// The middle exterior power form on Λ^s of a rank-2s space: gram entry
/// (S,T) = wedge_sign(S,T), ε = (−1)^s, value tag det V, canonical
/// orientation +1.
template <class F>
TwistedForm<F> middle_exterior_form(const F& f, int r) {
    if (r < 2 || r % 2 != 0) throw odd_rank("middle exterior power form needs even rank >= 2");
    int s = r / 2;
    ExteriorBasis basis(r, s);
    Mat<F> g(f, basis.size(), basis.size());
    for (int i = 0; i < basis.size(); ++i)
        for (int j = 0; j < basis.size(); ++j)
            g(i, j) = f.from_int(wedge_sign(basis.mask(i), basis.mask(j)));
    TwistedForm<F> form{g, s % 2 == 0 ? 1 : -1, Twist::of("detV"), 0, f.one()};
    return form;
}

/// Standard hyperbolic form H(F) of rank 2m with gram [[0, I], [εI, 0]];
/// carries the canonical orientation +1.
template <class F>
TwistedForm<F> hyperbolic_form(const F& f, int half_rank, int epsilon, const Twist& twist = Twist::trivial()) {
    if (half_rank < 0) throw dimension_mismatch("negative hyperbolic rank");
    if (epsilon != 1 && epsilon != -1) throw error("epsilon must be ±1");
    Mat<F> g(f, 2 * half_rank, 2 * half_rank);
    for (int i = 0; i < half_rank; ++i) {
        g(i, half_rank + i) = f.one();
        g(half_rank + i, i) = epsilon == 1 ? f.one() : -f.one();
    }
    return TwistedForm<F>{g, epsilon, twist, 0, f.one()};
}

/// Value of the signed discriminant: (−1)^{n/2}·det for symmetric forms.
/// For alternating forms det is already the square of the Pfaffian, so the
/// discriminant is det itself (Pfaffian-normalized witness); the two
/// conventions agree except in rank 2.
template <class F>
typename F::Elem signed_discriminant_value(const TwistedForm<F>& form) {
    int n = form.dim();
    if (n % 2 != 0) throw odd_rank("signed discriminant needs even rank");
    auto d = det(form.gram);
    if (form.field().is_zero(d)) throw irregular_form("signed discriminant of an irregular form");
    if (form.epsilon == -1) return d;
    return (n / 2) % 2 == 0 ? d : -d;
}

template <class F>
bool signed_discriminant_trivial(const TwistedForm<F>& form) {
    return form.field().is_square(signed_discriminant_value(form));
}

/// The canonical orientation witness of the middle exterior power form in
/// its standard basis: the signed discriminant value is exactly 1 there,
/// witnessed by c = 1.
template <class F>
typename F::Elem canonical_orientation(const F& f, int r) {
    TwistedForm<F> form = middle_exterior_form(f, r);
    auto d = signed_discriminant_value(form);
    if (d != f.one()) throw sign_convention_failure("middle form discriminant value is not 1");
    return f.one();
}

template <class F>
TwistedForm<F> orthogonal_sum(const TwistedForm<F>& a, const TwistedForm<F>& b) {
    if (a.epsilon != b.epsilon) throw field_mismatch("orthogonal sum of forms with different symmetry");
    if (a.twist != b.twist) throw field_mismatch("orthogonal sum of forms with different value twists");
    if (a.shift != b.shift) throw field_mismatch("orthogonal sum of forms in different degrees");
    TwistedForm<F> r{Mat<F>::block_diag(a.gram, b.gram), a.epsilon, a.twist, a.shift, std::nullopt};
    if (a.orientation && b.orientation) r.orientation = *a.orientation * *b.orientation;
    return r;
}

template <class F>
TwistedForm<F> tensor_product(const TwistedForm<F>& a, const TwistedForm<F>& b) {
    return TwistedForm<F>{Mat<F>::kronecker(a.gram, b.gram), a.epsilon * b.epsilon,
                          a.twist * b.twist, a.shift + b.shift, std::nullopt};
}

/// A rank-1 form ⟨a⟩ (handy for unit scaling in tensor products).
template <class F>
TwistedForm<F> unit_form(const F& f, const typename F::Elem& a, const Twist& twist = Twist::trivial()) {
    if (f.is_zero(a)) throw zero_input("unit form needs a nonzero scalar");
    Mat<F> g(f, 1, 1);
    g(0, 0) = a;
    return TwistedForm<F>{g, 1, twist, 0, std::nullopt};
}

template <class F>
bool verify_lagrangian(const TwistedForm<F>& form, const Mat<F>& incl) {
    int n = form.dim();
    if (n % 2 != 0 || incl.rows() != n) return false;
    if (incl.cols() != n / 2 || rank(incl) != n / 2) return false;
    return (incl.transpose() * form.gram * incl).is_zero();
}

/// Λ^s W ⊂ Λ^s V for a line-quotient sequence: a lagrangian of the middle
/// exterior power form.
template <class F>
Mat<F> lagrangian_from_quotient(const ShortExactSeq<F>& ses, int s) {
    ses.validate();
    if (!ses.is_line_quotient()) throw not_exact("expected a line-quotient sequence");
    return compound_matrix(ses.incl, s);
}

/// N′ ∧ (lift of Λ^{s−1} W′) ⊂ Λ^s V for a line-sub sequence: the
/// complementary family of lagrangians.  The product is independent of
/// the chosen lift because wedging with N′ kills the ambiguity.
template <class F>
Mat<F> lagrangian_from_subline(const ShortExactSeq<F>& ses, int s) {
    ses.validate();
    if (!ses.is_line_sub()) throw not_exact("expected a line-sub sequence");
    auto h = solve(ses.proj, Mat<F>::identity(ses.proj.field(), ses.proj.rows()));
    if (!h) throw not_exact("projection admits no section");
    return wedge_with_vector(ses.incl, s) * compound_matrix(*h, s - 1);
}

template <class F>
struct SplitIsometry {
    Mat<F> map;             // basis change carrying the hyperbolic form onto λ^s V
    TwistedForm<F> source;  // H(Λ^s W)
};

/// When V = N ⊕ W (every line-quotient sequence splits over a field), the
/// middle form is isometric to H(Λ^s W).  Returns the isometry exhibiting
/// the exact gram identity mapᵀ·(wedge gram)·map = hyperbolic gram.
template <class F>
SplitIsometry<F> middle_split_isometry(const ShortExactSeq<F>& ses, int s) {
    ses.validate();
    if (!ses.is_line_quotient()) throw not_exact("expected a line-quotient sequence");
    const F& f = ses.incl.field();
    int r = ses.ambient_rank();
    if (r != 2 * s) throw dimension_mismatch("middle split isometry needs r = 2s");
    TwistedForm<F> mid = middle_exterior_form(f, r);
    Mat<F> p1 = compound_matrix(ses.incl, s);
    auto section = solve(ses.proj, Mat<F>::identity(f, 1));
    if (!section) throw not_exact("projection admits no section");
    Mat<F> p2 = wedge_with_vector(*section, s) * compound_matrix(ses.incl, s - 1);
    Mat<F> cross = p1.transpose() * mid.gram * p2;
    auto cross_inv = inverse(cross);
    if (!cross_inv) throw sign_convention_failure("cross pairing of the split basis is singular");
    p2 = p2 * *cross_inv;
    Mat<F> p = Mat<F>::hcat(p1, p2);
    TwistedForm<F> hyp = hyperbolic_form(f, p1.cols(), mid.epsilon, mid.twist);
    if (p.transpose() * mid.gram * p != hyp.gram)
        throw sign_convention_failure("split isometry failed to reproduce the hyperbolic gram");
    return SplitIsometry<F>{p, hyp};
}

template <class F>
struct Similarity {
    Mat<F> phi;
    typename F::Elem multiplier;
    std::optional<typename F::Elem> xi;  // orientation comparison factor
};

/// φᵀ·G₂·φ = λ·G₁ — a similarity from form1 to form2 with multiplier λ.
template <class F>
bool is_similarity(const TwistedForm<F>& form1, const TwistedForm<F>& form2, const Mat<F>& phi,
                   const typename F::Elem& lambda) {
    const F& f = form1.field();
    if (f.is_zero(lambda)) throw zero_input("similarity multiplier must be nonzero");
    if (phi.rows() != form2.dim() || phi.cols() != form1.dim())
        throw dimension_mismatch("similarity matrix shape");
    if (form1.epsilon != form2.epsilon || form1.dim() != form2.dim()) return false;
    return phi.transpose() * form2.gram * phi == form1.gram.scaled(lambda);
}

/// Proper: the induced map on signed discriminants is the identity,
/// i.e. det φ = λ^{n/2}.
template <class F>
bool is_proper(const TwistedForm<F>& form, const Mat<F>& phi, const typename F::Elem& lambda) {
    int n = form.dim();
    if (n % 2 != 0) throw odd_rank("properness is defined for even rank");
    const F& f = form.field();
    auto lm = f.one();
    for (int i = 0; i < n / 2; ++i) lm = lm * lambda;
    return det(phi) == lm;
}

/// The middle exterior power of an invertible ψ, as an oriented similarity
/// of the middle form: (Λ^s ψ, det ψ, ξ) with
/// ξ = det(Λ^s ψ)·(det ψ)^{−C(r,s)/2}.  Always proper (ξ = 1, a compound
/// determinant identity), which the tests pin down.
template <class F>
Similarity<F> middle_power_similarity(const Mat<F>& psi, int s) {
    if (psi.rows() != psi.cols()) throw dimension_mismatch("square matrix expected");
    const F& f = psi.field();
    int r = psi.rows();
    if (r != 2 * s) throw dimension_mismatch("middle power needs r = 2s");
    auto lambda = det(psi);
    if (f.is_zero(lambda)) throw singular_matrix("middle power of a singular matrix");
    Mat<F> big = compound_matrix(psi, s);
    auto dbig = det(big);
    long long m = binomial(r, s) / 2;
    auto lm = f.one();
    for (long long i = 0; i < m; ++i) lm = lm * lambda;
    return Similarity<F>{big, lambda, dbig / lm};
}

template <class F>
struct HyperbolicSplit {
    Mat<F> vec;         // unimodular vector in the target summand
    Mat<F> covector;    // pairing functional with covector·vec = 1
    Mat<F> complement;  // kernel of the covector, a free complement
};

/// Hyperbolic-pair trick: given an isometry H(O) ⊥ (E,b) ≅ H(k^n) of
/// symmetric forms (the H(O) block occupying the first two coordinates,
/// the target in the standard [[0,I],[I,0]] shape), the image of e+f is
/// v + φ with φ(v) = 1, so v generates a free rank-1 summand.
template <class F>
HyperbolicSplit<F> hyperbolic_pair_split(const TwistedForm<F>& sum_form,
                                         const TwistedForm<F>& target_hyp, const Mat<F>& phi) {
    const F& f = sum_form.field();
    int dim = sum_form.dim();
    if (dim < 2 || dim % 2 != 0 || target_hyp.dim() != dim)
        throw premise_failed("shapes do not match H(O) ⊥ (E,b) ≅ H(N)");
    if (sum_form.epsilon != 1 || target_hyp.epsilon != 1)
        throw premise_failed("the hyperbolic-pair trick needs symmetric forms");
    int n = dim / 2;
    if (target_hyp.gram != hyperbolic_form(f, n, 1, target_hyp.twist).gram)
        throw premise_failed("target is not in standard hyperbolic shape");
    // leading H(O) block, orthogonal to the rest
    auto g = sum_form.gram;
    if (g(0, 0) != f.zero() || g(1, 1) != f.zero() || g(0, 1) != f.one() || g(1, 0) != f.one())
        throw premise_failed("no leading H(O) block");
    for (int j = 2; j < dim; ++j)
        if (!f.is_zero(g(0, j)) || !f.is_zero(g(1, j)))
            throw premise_failed("leading H(O) block is not split off orthogonally");
    if (!is_similarity(sum_form, target_hyp, phi, f.one()))
        throw premise_failed("the given map is not an isometry");
    Mat<F> ef(f, dim, 1);
    ef(0, 0) = f.one();
    ef(1, 0) = f.one();
    Mat<F> image = phi * ef;
    Mat<F> v(f, n, 1), cov(f, 1, n);
    for (int i = 0; i < n; ++i) {
        v(i, 0) = image(i, 0);
        cov(0, i) = image(n + i, 0);
    }
    if ((cov * v)(0, 0) != f.one())
        throw premise_failed("hyperbolic pair image does not pair to 1");
    return HyperbolicSplit<F>{v, cov, kernel_basis(cov)};
}

} // namespace midext
