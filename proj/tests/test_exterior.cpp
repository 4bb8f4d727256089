#include <doctest.h>

#include "midext/exterior.hpp"
#include "midext/poly.hpp"
#include "midext/random.hpp"

using namespace midext;

namespace {
uint32_t mask_of(std::initializer_list<int> elems) {
    uint32_t m = 0;
    for (int e : elems) m |= 1u << (e - 1);  // 1-based labels
    return m;
}
} // namespace

TEST_CASE("exterior basis is lexicographic") {
    ExteriorBasis b(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.mask(0) == mask_of({1, 2}));
    CHECK(b.mask(1) == mask_of({1, 3}));
    CHECK(b.mask(2) == mask_of({1, 4}));
    CHECK(b.mask(3) == mask_of({2, 3}));
    CHECK(b.mask(4) == mask_of({2, 4}));
    CHECK(b.mask(5) == mask_of({3, 4}));
    CHECK(b.index(mask_of({2, 4})) == 4);
    CHECK(b.label(0) == "e{1,2}");
}

TEST_CASE("wedge signs are shuffle parities") {
    CHECK(wedge_sign(mask_of({1, 2}), mask_of({3, 4})) == 1);
    CHECK(wedge_sign(mask_of({1, 3}), mask_of({2, 4})) == -1);
    CHECK(wedge_sign(mask_of({1, 2}), mask_of({2, 3})) == 0);
    CHECK(wedge_sign(mask_of({1, 4}), mask_of({2, 3})) == 1);
    CHECK(wedge_sign(mask_of({2}), mask_of({1})) == -1);
}

TEST_CASE("compound of the identity and of diagonals") {
    QField q;
    CHECK(compound_matrix(Mat<QField>::identity(q, 4), 2) == Mat<QField>::identity(q, 6));
    CHECK(compound_matrix(-Mat<QField>::identity(q, 4), 2) == Mat<QField>::identity(q, 6));

    RatFuncField<QField> kt{q};
    Mat<RatFuncField<QField>> d(kt, 4, 4);
    d(0, 0) = kt.variable();
    for (int i = 1; i < 4; ++i) d(i, i) = kt.one();
    Mat<RatFuncField<QField>> c = compound_matrix(d, 2);
    // lex pair order: 12, 13, 14 carry t; 23, 24, 34 are 1
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i != j)
                CHECK(kt.is_zero(c(i, j)));
            else
                CHECK(c(i, i) == (i < 3 ? kt.variable() : kt.one()));
        }
}

TEST_CASE("compound matrices are multiplicative") {
    QField q;
    FpField f3(3);
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int r = static_cast<int>(rng.integer(2, 5));
        int s = static_cast<int>(rng.integer(1, r));
        Mat<QField> a = rng.matrix(q, r, r), b = rng.matrix(q, r, r);
        CHECK(compound_matrix(a * b, s) == compound_matrix(a, s) * compound_matrix(b, s));
        Mat<FpField> a3 = rng.matrix(f3, r, r), b3 = rng.matrix(f3, r, r);
        CHECK(compound_matrix(a3 * b3, s) == compound_matrix(a3, s) * compound_matrix(b3, s));
    }
}

TEST_CASE("Sylvester-Franke: det of a compound is a power of the det") {
    QField q;
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        int r = static_cast<int>(rng.integer(2, 5));
        int s = static_cast<int>(rng.integer(1, r));
        Mat<QField> a = rng.invertible(q, r);
        Rational lhs = det(compound_matrix(a, s));
        Rational rhs(1L);
        Rational d = det(a);
        for (long long i = 0; i < binomial(r - 1, s - 1); ++i) rhs = rhs * d;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("parallel compound equals the serial reference") {
    QField q;
    Rng rng(33);
    Mat<QField> a = rng.matrix(q, 7, 7);
    for (int s : {2, 3, 4})
        CHECK(compound_matrix(a, s, Parallel::ForceParallel) == compound_matrix_serial(a, s));
}

TEST_CASE("contraction against the last coordinate, r=4 s=2") {
    QField q;
    Mat<QField> f4 = Mat<QField>::from_ints(q, {{0, 0, 0, 1}});
    Mat<QField> d = contraction_matrix(f4, 2);
    // columns in lex pair order 12,13,14,23,24,34; expansion of
    // f(v0)v1 - f(v1)v0 on each pair gives -e1, -e2, -e3 on 14, 24, 34
    Mat<QField> expect = Mat<QField>::from_ints(q, {{0, 0, -1, 0, 0, 0},
                                                    {0, 0, 0, 0, -1, 0},
                                                    {0, 0, 0, 0, 0, -1},
                                                    {0, 0, 0, 0, 0, 0}});
    CHECK(d == expect);
}

TEST_CASE("contraction at s=1 is the covector itself") {
    FpField f5(5);
    Rng rng(34);
    Mat<FpField> row = rng.nonzero_row(f5, 2);
    CHECK(contraction_matrix(row, 1) == row);
}

TEST_CASE("composing contractions gives zero") {
    QField q;
    FpField f5(5);
    Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        int r = static_cast<int>(rng.integer(2, 6));
        int s = static_cast<int>(rng.integer(2, r));
        Mat<QField> row = rng.matrix(q, 1, r);
        CHECK((contraction_matrix(row, s - 1) * contraction_matrix(row, s)).is_zero());
        Mat<FpField> row5 = rng.matrix(f5, 1, r);
        CHECK((contraction_matrix(row5, s - 1) * contraction_matrix(row5, s)).is_zero());
    }
}

TEST_CASE("Koszul complex of a coordinate epi on a rank-2 space") {
    QField q;
    KoszulComplex<QField> k = koszul_complex(Mat<QField>::from_ints(q, {{0, 1}}));
    CHECK(k.is_complex());
    CHECK(k.is_exact());
    CHECK(k.term_dim(0) == 1);
    CHECK(k.term_dim(1) == 2);
    CHECK(k.term_dim(2) == 1);
    CHECK(k.twist_exponents == std::vector<int>{0, 1, 2});
}

TEST_CASE("Koszul complex of the zero cosection is not exact") {
    QField q;
    KoszulComplex<QField> k = koszul_complex(Mat<QField>(q, 1, 4));
    CHECK(k.is_complex());
    CHECK(!k.is_exact());
    for (const auto& d : k.differentials) CHECK(d.is_zero());
}

TEST_CASE("Koszul exactness rank bookkeeping over F5") {
    FpField f5(5);
    Rng rng(36);
    for (int trial = 0; trial < 10; ++trial) {
        Mat<FpField> row = rng.nonzero_row(f5, 4);
        KoszulComplex<FpField> k = koszul_complex(row);
        CHECK(k.is_complex());
        CHECK(k.is_exact());
        // rank d_in + rank d_out = C(4, j) at each interior term
        for (size_t i = 0; i + 1 < k.differentials.size(); ++i) {
            int dim = k.differentials[i].cols();
            CHECK(rank(k.differentials[i]) + rank(k.differentials[i + 1]) == dim);
        }
    }
}

TEST_CASE("wedge_with_vector implements e_i insertion signs") {
    QField q;
    Mat<QField> n = Mat<QField>::from_ints(q, {{0}, {1}, {0}, {0}});
    Mat<QField> w = wedge_with_vector(n, 2);  // V -> Λ², v ↦ e2∧v
    // e2∧e1 = -e12, e2∧e3 = +e23, e2∧e4 = +e24
    ExteriorBasis pairs(4, 2);
    CHECK(w(pairs.index(mask_of({1, 2})), 0) == Rational(-1));
    CHECK(w(pairs.index(mask_of({2, 3})), 2) == Rational(1));
    CHECK(w(pairs.index(mask_of({2, 4})), 3) == Rational(1));
    CHECK(w(pairs.index(mask_of({1, 3})), 0) == Rational(0));
}
