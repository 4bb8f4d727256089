#pragma once

#include <random>

#include "midext/matrix.hpp"
#include "midext/rational.hpp"
#include "midext/fp.hpp"
#include "midext/poly.hpp"

namespace midext {

/// Seeded generators for the randomized property suites.  Deterministic
/// given the seed; every suite takes its seed from the CLI / test driver.
class Rng {
public:
    explicit Rng(unsigned long long seed) : g_(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(g_);
    }

    Rational rational(long long max_abs = 9, long long max_den = 9) {
        return Rational(integer(-max_abs, max_abs), integer(1, max_den));
    }
    Rational nonzero_rational(long long max_abs = 9, long long max_den = 9) {
        while (true) {
            Rational r = rational(max_abs, max_den);
            if (!r.is_zero()) return r;
        }
    }

    template <class F>
    typename F::Elem element(const F& f);

    template <class F>
    typename F::Elem nonzero_element(const F& f) {
        while (true) {
            auto e = element(f);
            if (!f.is_zero(e)) return e;
        }
    }

    template <class F>
    Mat<F> matrix(const F& f, int rows, int cols) {
        Mat<F> m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = element(f);
        return m;
    }

    template <class F>
    Mat<F> invertible(const F& f, int n) {
        while (true) {
            Mat<F> m = matrix(f, n, n);
            if (!f.is_zero(det(m))) return m;
        }
    }

    template <class F>
    Mat<F> nonzero_row(const F& f, int n) {
        while (true) {
            Mat<F> m = matrix(f, 1, n);
            if (!m.is_zero()) return m;
        }
    }

    template <class F>
    Mat<F> nonzero_col(const F& f, int n) {
        while (true) {
            Mat<F> m = matrix(f, n, 1);
            if (!m.is_zero()) return m;
        }
    }

    /// Random regular symmetric form gram (resamples until regular).
    template <class F>
    Mat<F> regular_symmetric(const F& f, int n) {
        while (true) {
            Mat<F> g = matrix(f, n, n);
            Mat<F> sym = g + g.transpose();
            if (!f.is_zero(det(sym))) return sym;
        }
    }

    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

template <>
inline Rational Rng::element<QField>(const QField&) {
    return rational(4, 4);
}

template <>
inline Fp Rng::element<FpField>(const FpField& f) {
    return Fp(integer(0, f.p - 1), f.p);
}

template <>
inline RatFunc<QField> Rng::element<RatFuncField<QField>>(const RatFuncField<QField>& kt) {
    // low-degree polynomial numerators keep the arithmetic light
    std::vector<Rational> cs;
    int deg = static_cast<int>(integer(0, 2));
    for (int i = 0; i <= deg; ++i) cs.push_back(rational(3, 2));
    return kt.from_poly(Poly<QField>(kt.base, cs));
}

} // namespace midext
