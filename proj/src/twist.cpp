#include "midext/twist.hpp"

#include "midext/errors.hpp"

namespace midext {

Twist Twist::parse(const std::string& s) {
    if (s.empty() || s == "1") return Twist();
    Twist t;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string piece = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        size_t caret = piece.find('^');
        std::string sym = piece.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(piece.substr(caret + 1));
            } catch (const std::exception&) {
                throw parse_error("bad twist exponent in '" + s + "'");
            }
        }
        if (sym.empty()) throw parse_error("bad twist '" + s + "'");
        t.mul(sym, e);
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return t;
}

} // namespace midext
