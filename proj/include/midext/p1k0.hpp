#pragma once

#include <optional>
#include <string>
#include <vector>

#include "midext/klein.hpp"
#include "midext/poly.hpp"

namespace midext {

/// A direct sum of line bundles on the projective line, recorded by its
/// multiset of twist degrees (ascending).
struct SplitBundle {
    std::vector<int> degrees;

    SplitBundle() = default;
    explicit SplitBundle(std::vector<int> ds);

    int rank() const { return static_cast<int>(degrees.size()); }
    long long degree() const;

    bool operator==(const SplitBundle& o) const { return degrees == o.degrees; }
    bool operator!=(const SplitBundle& o) const { return degrees != o.degrees; }
    std::string to_string() const;
};

/// K₀ of the projective line as (rank, degree) with the usual ring laws.
struct K0Class {
    long long rank = 0;
    long long degree = 0;

    K0Class operator+(const K0Class& o) const { return {rank + o.rank, degree + o.degree}; }
    K0Class operator-(const K0Class& o) const { return {rank - o.rank, degree - o.degree}; }
    K0Class operator-() const { return {-rank, -degree}; }
    K0Class operator*(const K0Class& o) const {
        return {rank * o.rank, rank * o.degree + o.rank * degree};
    }
    K0Class dual() const { return {rank, -degree}; }
    K0Class twist(long long l) const { return {rank, degree + rank * l}; }

    bool operator==(const K0Class& o) const { return rank == o.rank && degree == o.degree; }
    bool operator!=(const K0Class& o) const { return !(*this == o); }
    bool is_zero() const { return rank == 0 && degree == 0; }
    std::string to_string() const {
        return "(" + std::to_string(rank) + ", " + std::to_string(degree) + ")";
    }
};

K0Class k0(const SplitBundle& v);

SplitBundle split_dual(const SplitBundle& v);
SplitBundle split_det(const SplitBundle& v);
SplitBundle split_tensor(const SplitBundle& a, const SplitBundle& b);
/// Λ^j of a split bundle: one summand per j-subset, of degree the subset sum.
SplitBundle split_exterior_power(const SplitBundle& v, int j);

/// λ_{-1} class: Σ_j (−1)^j [Λ^j W^∨].
K0Class lambda_minus_one(const SplitBundle& w);

/// Forgetful image of the hyperbolic of x in twisted shifted degree r:
/// x + (−1)^r · x^∨ ⊗ O(l).  The sign is the one that makes the rank-1
/// obstruction come out as [O] − [L^∨].
K0Class forgetful_hyperbolic(const K0Class& x, long long l, int shift);

struct EulerForgetful {
    K0Class value;
    std::optional<K0Class> explicit_formula;  // middle power + hyperbolic tail
    K0Class lambda_rep;                       // H(λ_{-1} of a corank-1 summand)
};

/// Forgetful image of the Euler class of a split bundle, computed two
/// independent ways (which must and do agree):
///   A. (−1)^s[Λ^s V^∨] (even rank only) + fH(Σ_{j=0}^{⌊(r−1)/2⌋}(−1)^j[Λ^j V^∨]);
///   B. fH(λ_{-1}(W)) for W a corank-1 summand.
/// The (−1)^s is the K₀ Euler characteristic of a form placed in
/// homological degree s.
EulerForgetful euler_forgetful(const SplitBundle& v);

/// Way B alone, defined for every rank (the unit class for rank 0); used
/// by the Whitney multiplicativity check.
K0Class euler_forgetful_k0(const SplitBundle& v);

/// Whitney formula at the forgetful level: e(V) = e(W)·e(N) for a line
/// summand N of degree d.
bool whitney_check_k0(const SplitBundle& v, int summand_degree);

/// det W ⊗ λ_{-1}(W) = (−1)^{rk W} λ_{-1}(W^∨) in K₀.
bool dual_identity_check(const SplitBundle& w);

/// A line-bundle-valued form on a split bundle over the projective line:
/// entries are chart polynomials, entry (i,j) homogeneous of degree
/// ℓ − d_i − d_j (recorded as the homogenization bound).  basis_degrees
/// lists the summand degrees in grid order (the multiset `bundle` is its
/// sorted shadow): the two differ whenever the basis ordering is not the
/// degree ordering.
template <class F>
struct HomogeneousGram {
    int value_degree = 0;  // ℓ
    int epsilon = 1;
    SplitBundle bundle;
    std::vector<int> basis_degrees;  // aligned with the grid rows/columns
    std::vector<Poly<F>> entries;    // n×n grid, row-major

    int dim() const { return static_cast<int>(basis_degrees.size()); }
    const Poly<F>& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim() + j]; }

    int degree_bound(int i, int j) const {
        return value_degree - basis_degrees[i] - basis_degrees[j];
    }

    void validate() const {
        int n = dim();
        if (SplitBundle(basis_degrees) != bundle)
            throw dimension_mismatch("basis degrees do not match the bundle multiset");
        if (static_cast<int>(entries.size()) != n * n) throw dimension_mismatch("gram grid size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Poly<F>& e = at(i, j);
                Poly<F> mirror = epsilon == 1 ? at(j, i) : -at(j, i);
                if (e != mirror) throw degree_mismatch("gram is not ε-symmetric");
                if (!e.is_zero() && (degree_bound(i, j) < 0 || e.degree() > degree_bound(i, j)))
                    throw degree_mismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") violates homogeneity");
            }
    }

    Mat<RatFuncField<F>> chart_matrix(const RatFuncField<F>& kt) const {
        int n = dim();
        Mat<RatFuncField<F>> m(kt, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = kt.from_poly(at(i, j));
        return m;
    }
};

/// The wedge form of a rank-4 split bundle, valued in det V.  On the
/// complementary index pairs the degree bound is automatically 0, so the
/// entries are the constant wedge signs.
template <class F>
HomogeneousGram<F> wedge_form_p1(const F& f, const SplitBundle& v) {
    if (v.rank() != 4) throw dimension_mismatch("wedge form needs a rank-4 bundle");
    SplitBundle ext = split_exterior_power(v, 2);
    int l = static_cast<int>(v.degree());
    ExteriorBasis pairs(4, 2);
    std::vector<int> basis_degrees;
    for (int i = 0; i < pairs.size(); ++i) {
        int d = 0;
        for (int e : pairs.elements(i)) d += v.degrees[e];
        basis_degrees.push_back(d);
    }
    HomogeneousGram<F> hg{l, 1, ext, basis_degrees, {}};
    hg.entries.assign(36, Poly<F>(f));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int sign = wedge_sign(pairs.mask(i), pairs.mask(j));
            if (sign != 0)
                hg.entries[static_cast<size_t>(i) * 6 + j] =
                    Poly<F>::constant(f, f.from_int(sign));
        }
    hg.validate();
    return hg;
}

/// Regularity of a homogeneous gram: the determinant is a nonzero
/// constant, which forces n·ℓ = 2·Σ d_i.
template <class F>
bool homogeneous_regularity(const F& f, const HomogeneousGram<F>& hg) {
    hg.validate();
    RatFuncField<F> kt(f);
    auto d = det(hg.chart_matrix(kt));
    if (d.is_zero() || !d.is_constant()) return false;
    long long total = 0;
    for (int deg : hg.bundle.degrees) total += deg;
    return static_cast<long long>(hg.dim()) * hg.value_degree == 2 * total;
}

/// A Klein point with graded data: chart polynomials plus the column
/// twists, i.e. the maps O(m_j) → V = ⊕O(d_i).
template <class F>
struct GradedKleinPoint {
    PointKind kind;
    int rows = 0, cols = 0;
    std::vector<Poly<F>> data;  // row-major
    std::vector<int> twists;    // one per column

    const Poly<F>& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    std::string kind_name() const { return point_kind_name(kind); }
};

namespace detail {

template <class F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>(a.base());
    Poly<F> g = poly_gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

} // namespace detail

/// Generic-fiber Klein inversion over the projective line: run the field
/// inverse over k(t), then saturate column by column (clear denominators,
/// divide by the entry gcd, homogenize to the minimal twist) and re-check
/// that the result is a genuine subbundle inclusion — gcd of the maximal
/// minors constant, with at least one minor attaining its degree bound so
/// nothing degenerates at infinity.
template <class F>
GradedKleinPoint<F> klein_inverse_p1(const F& f, const SplitBundle& v,
                                     const Mat<RatFuncField<F>>& lagr) {
    if (v.rank() != 4) throw dimension_mismatch("rank-4 bundles only");
    const RatFuncField<F> kt(f);
    TwistedForm<RatFuncField<F>> wedge = middle_exterior_form(kt, 4);
    if (!verify_lagrangian(wedge, lagr))
        throw not_lagrangian("not a lagrangian of the wedge form over k(t)");
    KleinPoint<RatFuncField<F>> pt = klein_inverse(lagr);
    int rows = pt.data.rows(), cols = pt.data.cols();
    GradedKleinPoint<F> out{pt.kind, rows, cols, {}, {}};
    out.data.assign(static_cast<size_t>(rows) * cols, Poly<F>(f));
    for (int j = 0; j < cols; ++j) {
        // clear denominators
        Poly<F> common = Poly<F>::constant(f, f.one());
        for (int i = 0; i < rows; ++i)
            common = detail::poly_lcm(common, pt.data(i, j).den());
        std::vector<Poly<F>> col(rows, Poly<F>(f));
        Poly<F> content(f);
        for (int i = 0; i < rows; ++i) {
            RatFunc<F> scaled = pt.data(i, j) * kt.from_poly(common);
            if (scaled.den().degree() != 0)
                throw saturation_failure("denominator survived clearing");
            col[i] = scaled.num().scaled(f.one() / scaled.den().lc());
            content = content.is_zero() ? col[i] : poly_gcd(content, col[i]);
        }
        if (content.is_zero()) throw saturation_failure("zero column in Klein point data");
        // divide out the gcd, normalize the first nonzero entry monic
        for (int i = 0; i < rows; ++i)
            if (!col[i].is_zero()) col[i] = col[i].divmod(content).first;
        typename F::Elem scale = f.one();
        for (int i = 0; i < rows; ++i)
            if (!col[i].is_zero()) { scale = f.one() / col[i].lc(); break; }
        int twist = 0;
        bool seen = false;
        for (int i = 0; i < rows; ++i) {
            if (col[i].is_zero()) continue;
            col[i] = col[i].scaled(scale);
            int bound = v.degrees[i] - col[i].degree();
            twist = seen ? std::min(twist, bound) : bound;
            seen = true;
        }
        out.twists.push_back(twist);
        for (int i = 0; i < rows; ++i) out.data[static_cast<size_t>(i) * cols + j] = col[i];
    }
    // re-verify the graded inclusion: a subbundle must keep full rank at
    // every point, including infinity
    long long twist_sum = 0;
    for (int t : out.twists) twist_sum += t;
    std::vector<int> all_cols(cols);
    for (int j = 0; j < cols; ++j) all_cols[j] = j;
    ExteriorBasis row_sets(rows, cols);
    Poly<F> minor_gcd(f);
    bool attains = false;
    Mat<RatFuncField<F>> chart(kt, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) chart(i, j) = kt.from_poly(out.at(i, j));
    if (rank(chart) != cols) throw saturation_failure("saturated data lost rank");
    for (int si = 0; si < row_sets.size(); ++si) {
        auto rows_sel = row_sets.elements(si);
        auto minor = det(chart.submatrix(rows_sel, all_cols));
        if (minor.den().degree() != 0) throw saturation_failure("minor is not polynomial");
        Poly<F> mp = minor.num();
        long long bound = -twist_sum;
        for (int i : rows_sel) bound += v.degrees[i];
        if (!mp.is_zero()) {
            if (mp.degree() > bound) throw saturation_failure("minor exceeds its degree bound");
            if (mp.degree() == bound) attains = true;
            minor_gcd = minor_gcd.is_zero() ? mp : poly_gcd(minor_gcd, mp);
        }
    }
    if (minor_gcd.is_zero() || minor_gcd.degree() != 0)
        throw saturation_failure("maximal minors share a zero: not a subbundle");
    if (!attains) throw saturation_failure("all minors drop rank at infinity");
    return out;
}

} // namespace midext
