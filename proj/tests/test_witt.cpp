#include <doctest.h>

#include "midext/isotropic.hpp"
#include "midext/random.hpp"
#include "midext/witt.hpp"

#include "oracles.hpp"

using namespace midext;

TEST_CASE("diagonalization preserves the form class") {
    QField q;
    Rng rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        int n = static_cast<int>(rng.integer(1, 6));
        Mat<QField> g = rng.regular_symmetric(q, n);
        TwistedForm<QField> form{g, 1, Twist::trivial(), 0, std::nullopt};
        auto d = diagonalize(form);
        REQUIRE(static_cast<int>(d.size()) == n);
        // determinant class is preserved
        Rational prod(1L);
        for (const auto& x : d) prod = prod * x;
        CHECK(square_class(prod) == square_class(det(g)));
    }
}

TEST_CASE("invariants of hyperbolic forms pin the Hasse convention") {
    QField q;
    for (int m = 1; m <= 4; ++m) {
        WittInvariantsQ inv = witt_invariants_q(hyperbolic_form(q, m, 1));
        CHECK(inv.dim == 2 * m);
        CHECK(inv.signature == 0);
        CHECK(inv.disc == 1);
        CHECK(inv == hyperbolic_invariants_q(m));
    }
    // with the ∏_{i<j} convention, ⟨1,−1⟩³ has Hasse symbol −1 at p = 2
    CHECK(hyperbolic_invariants_q(3).hasse == std::map<long long, int>{{2, -1}});
    CHECK(hyperbolic_invariants_q(2).hasse == std::map<long long, int>{{2, -1}});
    CHECK(hyperbolic_invariants_q(4).hasse == std::map<long long, int>{});
}

TEST_CASE("the rank-4 middle form is hyperbolic over Q") {
    QField q;
    TwistedForm<QField> mid = middle_exterior_form(q, 4);
    WittInvariantsQ inv = witt_invariants_q(mid);
    CHECK(inv.signature == 0);
    CHECK(inv.disc == 1);
    CHECK(is_hyperbolic_q(mid));
}

TEST_CASE("positive definite forms are not hyperbolic") {
    QField q;
    TwistedForm<QField> e4{Mat<QField>::identity(q, 4), 1, Twist::trivial(), 0, std::nullopt};
    WittInvariantsQ inv = witt_invariants_q(e4);
    CHECK(inv.signature == 4);
    CHECK(!is_hyperbolic_q(e4));
}

TEST_CASE("isometry over Q is decided by the complete invariants") {
    QField q;
    // diag(1,−2) vs diag(2,−1): same dim, signature, disc, Hasse
    Mat<QField> g1(q, 2, 2), g2(q, 2, 2);
    g1(0, 0) = Rational(1);
    g1(1, 1) = Rational(-2);
    g2(0, 0) = Rational(2);
    g2(1, 1) = Rational(-1);
    TwistedForm<QField> f1{g1, 1, Twist::trivial(), 0, std::nullopt};
    TwistedForm<QField> f2{g2, 1, Twist::trivial(), 0, std::nullopt};
    CHECK(witt_invariants_q(f1).disc == 2);
    CHECK(witt_invariants_q(f2).disc == 2);
    CHECK(witt_invariants_q(f1).hasse.empty());
    CHECK(is_isometric_q(f1, f2));
    // diag(1,1) vs diag(3,3): same dim, signature, disc — Hasse separates
    // them (x² + y² does not represent 3)
    Mat<QField> g3 = Mat<QField>::identity(q, 2);
    Mat<QField> g4 = Mat<QField>::identity(q, 2).scaled(Rational(3));
    TwistedForm<QField> f3{g3, 1, Twist::trivial(), 0, std::nullopt};
    TwistedForm<QField> f4{g4, 1, Twist::trivial(), 0, std::nullopt};
    CHECK(witt_invariants_q(f3).disc == witt_invariants_q(f4).disc);
    CHECK(witt_invariants_q(f4).hasse == std::map<long long, int>{{2, -1}, {3, -1}});
    CHECK(!is_isometric_q(f3, f4));
    CHECK(is_isometric_q(f3, f3));
    // diag(2,2) on the other hand is isometric to diag(1,1)
    TwistedForm<QField> f5{Mat<QField>::identity(q, 2).scaled(Rational(2)), 1, Twist::trivial(), 0,
                           std::nullopt};
    CHECK(is_isometric_q(f3, f5));
}

TEST_CASE("invariants are stable under change of basis") {
    QField q;
    Rng rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(rng.integer(2, 5));
        Mat<QField> g = rng.regular_symmetric(q, n);
        Mat<QField> p = rng.invertible(q, n);
        TwistedForm<QField> a{g, 1, Twist::trivial(), 0, std::nullopt};
        TwistedForm<QField> b{p.transpose() * g * p, 1, Twist::trivial(), 0, std::nullopt};
        CHECK(witt_invariants_q(a) == witt_invariants_q(b));
        CHECK(is_isometric_q(a, b));
    }
}

TEST_CASE("alternating forms: rank decides everything") {
    QField q;
    TwistedForm<QField> m2 = middle_exterior_form(q, 2);
    CHECK(is_hyperbolic_q(m2));
    CHECK(is_isometric_q(m2, hyperbolic_form(q, 1, -1)));
}

TEST_CASE("brute force: the two isotropic lines of xy = 0 over F3") {
    FpField f3(3);
    auto ls = brute_force_lagrangians(hyperbolic_form(f3, 1, 1));
    CHECK(ls.size() == 2);
    // the lines x = 0 and y = 0
    CHECK(ls[0] == Mat<FpField>::from_ints(f3, {{1}, {0}}));
    CHECK(ls[1] == Mat<FpField>::from_ints(f3, {{0}, {1}}));
}

TEST_CASE("brute force: 80 lagrangians of the rank-4 wedge form over F3") {
    FpField f3(3);
    auto ls = brute_force_lagrangians(middle_exterior_form(f3, 4));
    CHECK(static_cast<long long>(ls.size()) == oracles::split_rank6_lagrangian_count(3));
    TwistedForm<FpField> mid = middle_exterior_form(f3, 4);
    for (const auto& l : ls) CHECK(verify_lagrangian(mid, l));
}

TEST_CASE("brute force is basis independent (oracle self-consistency)") {
    FpField f3(3);
    TwistedForm<FpField> mid = middle_exterior_form(f3, 4);
    Rng rng(63);
    Mat<FpField> p = rng.invertible(f3, 6);
    TwistedForm<FpField> moved{p.transpose() * mid.gram * p, 1, mid.twist, 0, std::nullopt};
    CHECK(brute_force_lagrangians(moved).size() == brute_force_lagrangians(mid).size());
}

TEST_CASE("parallel enumeration matches the serial reference exactly") {
    FpField f3(3);
    TwistedForm<FpField> mid = middle_exterior_form(f3, 4);
    auto serial = brute_force_lagrangians_serial(mid);
    auto parallel = brute_force_lagrangians(mid, 100000, Parallel::ForceParallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("enumeration budget is enforced with the space estimate") {
    FpField f7(7);
    TwistedForm<FpField> mid = middle_exterior_form(f7, 4);
    CHECK_THROWS_AS(brute_force_lagrangians(mid, 1000), budget_exceeded);
    CHECK(gaussian_binomial(6, 3, 3) == 33880);
}

TEST_CASE("hyperbolicity criterion agrees with enumeration over F3") {
    FpField f3(3);
    Rng rng(64);
    int checked = 0;
    while (checked < 25) {
        int n = 2 * static_cast<int>(rng.integer(1, 3));
        Mat<FpField> g = rng.regular_symmetric(f3, n);
        TwistedForm<FpField> form{g, 1, Twist::trivial(), 0, std::nullopt};
        bool by_invariants = is_hyperbolic_fp(form);
        bool by_enumeration = !brute_force_lagrangians(form).empty();
        CHECK(by_invariants == by_enumeration);
        ++checked;
    }
}

TEST_CASE("echelon witnesses match the canonical column echelon form") {
    FpField f3(3);
    auto ls = brute_force_lagrangians(middle_exterior_form(f3, 4));
    for (size_t i = 0; i < ls.size(); i += 7) CHECK(column_echelon(ls[i]) == ls[i]);
}
