#include "midext/fp.hpp"

namespace midext {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Fp Fp::inverse() const {
    check();
    if (v_ == 0) throw division_by_zero("inverse of 0 in F_p");
    // extended Euclid
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
}

bool FpField::is_square(const Fp& a) const {
    if (a.is_zero()) return true;
    // Euler criterion
    long long e = (p - 1) / 2, base = a.value() % p, r = 1;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1;
}

} // namespace midext
