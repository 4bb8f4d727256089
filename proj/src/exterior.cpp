#include "midext/exterior.hpp"

#include <bit>

#include "midext/errors.hpp"

namespace midext {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

ExteriorBasis::ExteriorBasis(int r, int s) : r_(r), s_(s) {
    if (r < 0 || r > 30) throw dimension_mismatch("exterior basis rank out of range");
    if (s < 0 || s > r) {
        // empty basis: Λ^s = 0
        return;
    }
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    while (true) {
        uint32_t m = 0;
        for (int i : c) m |= 1u << i;
        index_[m] = static_cast<int>(masks_.size());
        masks_.push_back(m);
        // next combination in lex order
        int i = s - 1;
        while (i >= 0 && c[i] == r - s + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
}

int ExteriorBasis::index(uint32_t mask) const {
    auto it = index_.find(mask);
    if (it == index_.end()) throw out_of_range("subset not in exterior basis");
    return it->second;
}

std::vector<int> ExteriorBasis::elements(int idx) const {
    std::vector<int> out;
    uint32_t m = masks_[idx];
    for (int i = 0; i < r_; ++i)
        if (m & (1u << i)) out.push_back(i);
    return out;
}

std::string ExteriorBasis::label(int idx) const {
    std::string s = "e{";
    bool first = true;
    for (int i : elements(idx)) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

int wedge_sign(uint32_t s_mask, uint32_t t_mask) {
    if (s_mask & t_mask) return 0;
    // inversions: pairs (s, t) with s in S, t in T, s > t
    int inv = 0;
    for (int i = 0; i < 32; ++i) {
        if (!(s_mask & (1u << i))) continue;
        inv += std::popcount(t_mask & ((1u << i) - 1));
    }
    return inv % 2 ? -1 : 1;
}

int insert_sign(int i, uint32_t s_mask) {
    if (s_mask & (1u << i)) return 0;
    return std::popcount(s_mask & ((1u << i) - 1)) % 2 ? -1 : 1;
}

} // namespace midext
