#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "midext/errors.hpp"

namespace midext {

/// Dense matrix over an exact field.  Row-major; immutable in spirit (all
/// algorithms work on copies).  Empty shapes (0 rows or columns) are legal
/// and show up as kernels of injective maps, rank-0 forms etc.
template <class F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat(const F& f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {
        if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix shape");
    }

    static Mat identity(const F& f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Mat from_rows(const F& f, std::initializer_list<std::initializer_list<Elem>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        Mat m(f, r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw dimension_mismatch("ragged rows");
            int j = 0;
            for (const auto& e : row) m(i, j++) = e;
            ++i;
        }
        return m;
    }

    static Mat from_ints(const F& f, std::initializer_list<std::initializer_list<long>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        Mat m(f, r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw dimension_mismatch("ragged rows");
            int j = 0;
            for (long e : row) m(i, j++) = f.from_int(e);
            ++i;
        }
        return m;
    }

    const F& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Elem& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require_shape(o.rows_, o.cols_);
        Mat r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_shape(o.rows_, o.cols_);
        Mat r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& e : r.a_) e = -e;
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw dimension_mismatch("matrix product shape");
        Mat r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = (*this)(i, k);
                if (f_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }
    Mat scaled(const Elem& c) const {
        Mat r = *this;
        for (auto& e : r.a_) e = e * c;
        return r;
    }

    Mat transpose() const {
        Mat r(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Mat r(f_, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
        return r;
    }

    Mat col(int j) const {
        Mat r(f_, rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }

    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_) throw dimension_mismatch("hcat row counts");
        Mat r(a.f_, a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    static Mat vcat(const Mat& a, const Mat& b) {
        if (a.cols_ != b.cols_) throw dimension_mismatch("vcat column counts");
        Mat r(a.f_, a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat r(a.f_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    static Mat kronecker(const Mat& a, const Mat& b) {
        Mat r(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j)
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += f_.print((*this)(i, j));
            }
            s += '\n';
        }
        return s;
    }

private:
    void require_shape(int r, int c) const {
        if (rows_ != r || cols_ != c) throw dimension_mismatch("matrix shape mismatch");
    }

    F f_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

namespace detail {

// In-place reduced row echelon form with first-nonzero pivoting.
// Returns the pivot columns.  No tolerances anywhere: entries are exact.
template <class F>
std::vector<int> rref_in_place(Mat<F>& m) {
    const F& f = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!f.is_zero(m(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        auto inv = f.one() / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m(i, col))) continue;
            auto c = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - c * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

template <class F>
int rank(const Mat<F>& a) {
    Mat<F> m = a;
    return static_cast<int>(detail::rref_in_place(m).size());
}

/// Columns form a basis of ker(a); the basis is the standard one read off
/// the reduced row echelon form (free variable = 1, pivots back-substituted).
template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
    const F& f = a.field();
    Mat<F> m = a;
    std::vector<int> pivots = detail::rref_in_place(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int nf = a.cols() - static_cast<int>(pivots.size());
    Mat<F> k(f, a.cols(), nf);
    int kcol = 0;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        k(c, kcol) = f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            k(pivots[r], kcol) = -m(static_cast<int>(r), c);
        ++kcol;
    }
    return k;
}

template <class F>
typename F::Elem det(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("determinant of non-square matrix");
    const F& f = a.field();
    Mat<F> m = a;
    auto d = f.one();
    bool neg = false;
    for (int col = 0; col < m.cols(); ++col) {
        int p = -1;
        for (int i = col; i < m.rows(); ++i)
            if (!f.is_zero(m(i, col))) { p = i; break; }
        if (p < 0) return f.zero();
        if (p != col) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(col, j));
            neg = !neg;
        }
        d = d * m(col, col);
        auto inv = f.one() / m(col, col);
        for (int i = col + 1; i < m.rows(); ++i) {
            if (f.is_zero(m(i, col))) continue;
            auto c = m(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - c * m(col, j);
        }
    }
    return neg ? -d : d;
}

/// One solution X of A X = B, or nothing when the system is inconsistent.
/// Free variables are set to zero.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("solve row counts");
    const F& f = a.field();
    Mat<F> m = Mat<F>::hcat(a, b);
    detail::rref_in_place(m);
    // pivots within the A-part only
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col)
        if (!f.is_zero(m(row, col))) { pivots.push_back(col); ++row; }
    // consistency: no pivot may fall in the B-part
    for (int i = row; i < m.rows(); ++i)
        for (int j = a.cols(); j < m.cols(); ++j)
            if (!f.is_zero(m(i, j))) return std::nullopt;
    Mat<F> x(f, a.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = m(static_cast<int>(r), a.cols() + j);
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("inverse of non-square matrix");
    auto x = solve(a, Mat<F>::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

/// Canonical basis of the column space: reduced column echelon form
/// (transpose of the RREF of the transpose).  Two column spans are equal
/// iff their reduced forms are literally equal.
template <class F>
Mat<F> column_echelon(const Mat<F>& a) {
    Mat<F> t = a.transpose();
    std::vector<int> pivots = detail::rref_in_place(t);
    Mat<F> r(a.field(), a.rows(), static_cast<int>(pivots.size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r(i, j) = t(j, i);
    return r;
}

/// Basis of (column space of a) ∩ (column space of b).
template <class F>
Mat<F> intersect_column_spaces(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("intersecting spaces of different ambient dimension");
    // ker [a | -b] gives pairs (x, y) with a x = b y
    Mat<F> k = kernel_basis(Mat<F>::hcat(a, -b));
    Mat<F> xs(a.field(), a.cols(), k.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) xs(i, j) = k(i, j);
    return column_echelon(a * xs);
}

/// Everything the elimination engine offers in one bundle.
template <class F>
struct LinalgSuite {
    int rank;
    Mat<F> kernel;
    std::optional<typename F::Elem> determinant;  // square input only
};

template <class F>
LinalgSuite<F> linalg_suite(const Mat<F>& a) {
    LinalgSuite<F> s{rank(a), kernel_basis(a), std::nullopt};
    if (a.rows() == a.cols()) s.determinant = det(a);
    return s;
}

} // namespace midext
