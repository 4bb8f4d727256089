#include "midext/rational.hpp"

namespace midext {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool QField::is_square(const Rational& a) const {
    if (a.sign() < 0) return false;
    if (a.is_zero()) return true;
    mpz_class n = a.num(), d = a.den();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

} // namespace midext
