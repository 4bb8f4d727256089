#pragma once

#include <string>
#include <utility>
#include <vector>

#include "midext/errors.hpp"

namespace midext {

/// Dense univariate polynomial over an exact field F.  Coefficients are
/// stored in ascending degree with no trailing zeros; the zero polynomial
/// has an empty coefficient vector.
template <class F>
class Poly {
public:
    using Coeff = typename F::Elem;

    explicit Poly(const F& f) : f_(f) {}
    Poly(const F& f, std::vector<Coeff> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& f, const Coeff& a) {
        return f.is_zero(a) ? Poly(f) : Poly(f, {a});
    }
    static Poly variable(const F& f) { return Poly(f, {f.zero(), f.one()}); }

    const F& base() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Coeff coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return f_.zero();
        return c_[i];
    }
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff lc() const {
        if (is_zero()) throw zero_input("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        std::vector<Coeff> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(-a);
        return Poly(f_, std::move(r));
    }
    Poly operator+(const Poly& o) const {
        std::vector<Coeff> r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) r.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
        return Poly(f_, std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(f_);
        std::vector<Coeff> r(c_.size() + o.c_.size() - 1, f_.zero());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Poly(f_, std::move(r));
    }
    Poly scaled(const Coeff& a) const {
        std::vector<Coeff> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * a);
        return Poly(f_, std::move(r));
    }

    // quotient and remainder
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw division_by_zero("polynomial division by zero");
        Poly rem = *this;
        std::vector<Coeff> q(std::max<size_t>(c_.size(), 1), f_.zero());
        Coeff inv_lc = f_.one() / d.lc();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            Coeff c = rem.lc() * inv_lc;
            q[k] = c;
            std::vector<Coeff> sub(k, f_.zero());
            sub.insert(sub.end(), d.c_.begin(), d.c_.end());
            rem = rem - Poly(f_, std::move(sub)).scaled(c);
        }
        return {Poly(f_, std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(f_.one() / lc());
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Coeff eval(const Coeff& x) const {
        Coeff r = f_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // coefficient list "c0,c1,..."
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += f_.print(c_[i]);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
    }

    F f_;
    std::vector<Coeff> c_;
};

template <class F>
Poly<F> poly_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

/// Square test for polynomials (used for square-class decisions over k(t)).
/// p is a square in k[t] iff its leading coefficient is a square in k and
/// its monic part has a polynomial square root.
template <class F>
bool poly_is_square(const Poly<F>& p) {
    const F& f = p.base();
    if (p.is_zero()) return true;
    if (p.degree() % 2 != 0) return false;
    if (!f.is_square(p.lc())) return false;
    Poly<F> m = p.monic();
    int k = m.degree() / 2;
    std::vector<typename F::Elem> q(k + 1, f.zero());
    q[k] = f.one();
    // match coefficients from the top: coeff of degree (2k - i) determines q[k-i]
    auto two = f.from_int(2);
    for (int i = 1; i <= k; ++i) {
        typename F::Elem acc = m.coeff(2 * k - i);
        for (int a = k - i + 1; a < k; ++a) {
            int b = 2 * k - i - a;
            if (b >= 0 && b <= k) acc = acc - q[a] * q[b];
        }
        q[k - i] = acc / two;
    }
    Poly<F> cand(f, q);
    return cand * cand == m;
}

/// Fraction of polynomials in lowest terms with monic denominator.
template <class F>
class RatFunc {
public:
    using Coeff = typename F::Elem;

    explicit RatFunc(const F& f) : num_(f), den_(Poly<F>::constant(f, f.one())) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        normalize();
    }
    explicit RatFunc(const Poly<F>& num) : num_(num), den_(Poly<F>::constant(num.base(), num.base().one())) {}

    const F& base() const { return num_.base(); }
    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw division_by_zero("rational function division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // "num" or "num/den" with polynomials as coefficient lists
    std::string to_string() const {
        if (den_.degree() == 0) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<F>::constant(num_.base(), num_.base().one());
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Coeff l = den_.lc();
        num_ = num_.scaled(num_.base().one() / l);
        den_ = den_.scaled(num_.base().one() / l);
    }

    Poly<F> num_, den_;
};

/// The rational function field k(t) over an exact base field k.
template <class F>
struct RatFuncField {
    F base;

    RatFuncField() = default;
    explicit RatFuncField(const F& f) : base(f) {}

    using Elem = RatFunc<F>;
    Elem zero() const { return RatFunc<F>(base); }
    Elem one() const { return RatFunc<F>(Poly<F>::constant(base, base.one())); }
    Elem from_int(long n) const { return RatFunc<F>(Poly<F>::constant(base, base.from_int(n))); }
    Elem variable() const { return RatFunc<F>(Poly<F>::variable(base)); }
    Elem from_poly(const Poly<F>& p) const { return RatFunc<F>(p); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_square(const Elem& a) const {
        if (a.is_zero()) return true;
        return poly_is_square(a.num()) && poly_is_square(a.den());
    }
    std::string name() const { return base.name() + "(t)"; }
    std::string print(const Elem& a) const { return a.to_string(); }
    Elem parse(const std::string& s) const;

    bool operator==(const RatFuncField& o) const { return base == o.base; }
    bool operator!=(const RatFuncField& o) const { return !(*this == o); }
};

template <class F>
typename RatFuncField<F>::Elem RatFuncField<F>::parse(const std::string& s) const {
    auto parse_poly = [&](const std::string& t) {
        std::vector<typename F::Elem> cs;
        size_t pos = 0;
        while (pos <= t.size()) {
            size_t next = t.find(',', pos);
            std::string tok = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.empty()) throw parse_error("bad polynomial literal '" + t + "'");
            cs.push_back(base.parse(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return Poly<F>(base, cs);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return RatFunc<F>(parse_poly(s));
    return RatFunc<F>(parse_poly(s.substr(0, slash)), parse_poly(s.substr(slash + 1)));
}

} // namespace midext
