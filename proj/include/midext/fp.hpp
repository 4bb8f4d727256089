#pragma once

#include <cstdint>
#include <string>

#include "midext/errors.hpp"

namespace midext {

bool is_prime(long long n);

/// Element of a prime field F_p.  Carries its modulus; mixing moduli is a
/// hard error.  Default-constructed elements are detached (p = 0) and may
/// only be assigned over, never computed with.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, long long p) : p_(p) {
        if (p <= 0) throw unsupported_field("F_p needs a positive modulus");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { check(); return Fp(p_ - v_, p_); }
    Fp operator+(const Fp& o) const { match(o); return Fp(v_ + o.v_, p_); }
    Fp operator-(const Fp& o) const { match(o); return Fp(v_ - o.v_ + p_, p_); }
    Fp operator*(const Fp& o) const { match(o); return Fp(v_ * o.v_ % p_, p_); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const;

    bool operator==(const Fp& o) const {
        if (p_ != o.p_ && p_ != 0 && o.p_ != 0) throw field_mismatch("comparing elements of different F_p");
        return v_ == o.v_ && (p_ == o.p_ || v_ == 0);
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check() const {
        if (p_ == 0) throw field_mismatch("arithmetic on detached F_p element");
    }
    void match(const Fp& o) const {
        check();
        o.check();
        if (p_ != o.p_) throw field_mismatch("mixing F_p elements with different moduli");
    }

    long long v_, p_;
};

/// A prime field of odd characteristic.  p = 2 (and composite p) rejected.
struct FpField {
    long long p = 0;

    FpField() = default;
    explicit FpField(long long prime) : p(prime) {
        if (p == 2) throw unsupported_field("characteristic 2 is not supported");
        if (!is_prime(p)) throw unsupported_field("modulus " + std::to_string(p) + " is not prime");
    }

    using Elem = Fp;
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long n) const { return Fp(n, p); }
    bool is_zero(const Fp& a) const { return a.is_zero(); }
    bool is_square(const Fp& a) const;
    std::string name() const { return "Fp:" + std::to_string(p); }
    std::string print(const Fp& a) const { return a.to_string(); }
    Fp parse(const std::string& s) const { return Fp(std::stoll(s), p); }

    bool operator==(const FpField& o) const { return p == o.p; }
    bool operator!=(const FpField& o) const { return p != o.p; }
};

} // namespace midext
