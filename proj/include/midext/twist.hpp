#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace midext {

/// Formal value-line-bundle tag: a product of named symbols with integer
/// exponents ("detV", "N^2*detV^-1", "1").  Over a field every line bundle
/// is trivial, but the tags are tracked so that twist bookkeeping stays
/// checkable; combining forms with mismatched twists is a hard error at
/// the call sites that care.
class Twist {
public:
    Twist() = default;

    static Twist trivial() { return Twist(); }
    static Twist of(const std::string& symbol, int exponent = 1) {
        Twist t;
        if (exponent != 0 && !symbol.empty()) t.factors_.push_back({symbol, exponent});
        return t;
    }

    bool is_trivial() const { return factors_.empty(); }

    Twist operator*(const Twist& o) const {
        Twist r = *this;
        for (const auto& f : o.factors_) r.mul(f.first, f.second);
        return r;
    }
    Twist pow(int n) const {
        Twist r;
        for (const auto& f : factors_)
            if (f.second * n != 0) r.factors_.push_back({f.first, f.second * n});
        return r;
    }
    Twist inverse() const { return pow(-1); }

    bool operator==(const Twist& o) const { return factors_ == o.factors_; }
    bool operator!=(const Twist& o) const { return !(*this == o); }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& f : factors_) {
            if (!s.empty()) s += '*';
            s += f.first;
            if (f.second != 1) s += "^" + std::to_string(f.second);
        }
        return s;
    }

    static Twist parse(const std::string& s);

private:
    void mul(const std::string& sym, int e) {
        auto it = std::find_if(factors_.begin(), factors_.end(),
                               [&](const auto& f) { return f.first == sym; });
        if (it == factors_.end()) {
            factors_.push_back({sym, e});
            std::sort(factors_.begin(), factors_.end());
        } else {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }

    std::vector<std::pair<std::string, int>> factors_;  // sorted by symbol
};

} // namespace midext
