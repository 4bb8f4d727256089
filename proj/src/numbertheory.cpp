#include "midext/numbertheory.hpp"

#include <algorithm>

#include "midext/errors.hpp"

namespace midext {

std::vector<std::pair<mpz_class, int>> factor(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) throw zero_input("factoring 0");
    std::vector<std::pair<mpz_class, int>> out;
    for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long square_class(const Rational& a) {
    if (a.is_zero()) throw zero_input("square class of 0");
    mpz_class n = a.num() * a.den();
    int sign = sgn(n);
    mpz_class d = 1;
    for (const auto& [p, e] : factor(n))
        if (e % 2 != 0) d *= p;
    d *= sign;
    if (!d.fits_slong_p()) throw error("square-class representative does not fit a machine word");
    return d.get_si();
}

int legendre(const mpz_class& a, long long p) {
    mpz_class r, pz(static_cast<long>(p));
    mpz_powm_ui(r.get_mpz_t(), mpz_class(((a % pz) + pz) % pz).get_mpz_t(),
                static_cast<unsigned long>((p - 1) / 2), pz.get_mpz_t());
    return r == 1 ? 1 : -1;
}

namespace {

// valuation and unit part of a nonzero rational at p
std::pair<int, Rational> val_unit(const Rational& a, long long p) {
    int v = 0;
    mpz_class num = a.num(), den = a.den(), pz(static_cast<long>(p));
    while (num % pz == 0) { num /= pz; ++v; }
    while (den % pz == 0) { den /= pz; --v; }
    return {v, Rational(num, den)};
}

// (x-1)/2 mod 2 and (x^2-1)/8 mod 2 for x an odd 2-adic unit (given as a
// rational with odd numerator and denominator)
int eps2(const Rational& u) {
    mpz_class x = u.num() * u.den();  // same class mod 8 squares aside
    mpz_class r = ((x - 1) / 2) % 2;
    return static_cast<int>(mpz_class(r < 0 ? r + 2 : r).get_si());
}
int omega2(const Rational& u) {
    mpz_class x = u.num() * u.den();
    mpz_class r = ((x * x - 1) / 8) % 2;
    return static_cast<int>(mpz_class(r < 0 ? r + 2 : r).get_si());
}

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, long long p) {
    if (a.is_zero() || b.is_zero()) throw zero_input("Hilbert symbol of 0");
    if (p == 0)  // real place
        return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    if (p < 2 || !is_prime(p)) throw error("Hilbert symbol place must be a prime or 0 (infinity)");
    auto [alpha, u] = val_unit(a, p);
    auto [beta, v] = val_unit(b, p);
    alpha &= 1;
    beta &= 1;
    if (p == 2) {
        int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int sym = 1;
    if (alpha && beta && ((p - 1) / 2) % 2 != 0) sym = -sym;
    if (beta) sym *= legendre(u.num() * u.den(), p);
    if (alpha) sym *= legendre(v.num() * v.den(), p);
    return sym;
}

std::vector<long long> hilbert_support(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw zero_input("Hilbert support of 0");
    std::vector<long long> ps{2};
    for (const Rational* x : {&a, &b}) {
        for (const auto& [p, e] : factor(x->num() * x->den())) {
            (void)e;
            if (!p.fits_slong_p()) throw error("prime too large for Hilbert support");
            long long q = p.get_si();
            if (std::find(ps.begin(), ps.end(), q) == ps.end()) ps.push_back(q);
        }
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

} // namespace midext
