#pragma once

#include <gmpxx.h>

#include <string>

#include "midext/errors.hpp"

namespace midext {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // "p" or "p/q"
    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }

    std::string to_string() const;

private:
    mpq_class v_;
};

/// The field of rationals.
struct QField {
    using Elem = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1L); }
    Rational from_int(long n) const { return Rational(n); }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
    /// Exact square test; no factorization involved.
    bool is_square(const Rational& a) const;
    std::string name() const { return "Q"; }
    std::string print(const Rational& a) const { return a.to_string(); }
    Rational parse(const std::string& s) const { return Rational::parse(s); }

    bool operator==(const QField&) const { return true; }
    bool operator!=(const QField&) const { return false; }
};

} // namespace midext
