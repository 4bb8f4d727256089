#include "midext/p1k0.hpp"

#include <algorithm>

namespace midext {

SplitBundle::SplitBundle(std::vector<int> ds) : degrees(std::move(ds)) {
    std::sort(degrees.begin(), degrees.end());
}

long long SplitBundle::degree() const {
    long long d = 0;
    for (int x : degrees) d += x;
    return d;
}

std::string SplitBundle::to_string() const {
    if (degrees.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) s += " + ";
        s += "O(" + std::to_string(degrees[i]) + ")";
    }
    return s;
}

K0Class k0(const SplitBundle& v) { return {v.rank(), v.degree()}; }

SplitBundle split_dual(const SplitBundle& v) {
    std::vector<int> ds;
    ds.reserve(v.degrees.size());
    for (int d : v.degrees) ds.push_back(-d);
    return SplitBundle(std::move(ds));
}

SplitBundle split_det(const SplitBundle& v) {
    return SplitBundle({static_cast<int>(v.degree())});
}

SplitBundle split_tensor(const SplitBundle& a, const SplitBundle& b) {
    std::vector<int> ds;
    for (int x : a.degrees)
        for (int y : b.degrees) ds.push_back(x + y);
    return SplitBundle(std::move(ds));
}

SplitBundle split_exterior_power(const SplitBundle& v, int j) {
    if (j < 0 || j > v.rank()) throw out_of_range("exterior power degree out of range");
    std::vector<int> ds;
    // subset sums of size j, via the combination walk
    int r = v.rank();
    std::vector<int> c(j);
    for (int i = 0; i < j; ++i) c[i] = i;
    while (true) {
        int sum = 0;
        for (int i : c) sum += v.degrees[i];
        ds.push_back(sum);
        int i = j - 1;
        while (i >= 0 && c[i] == r - j + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int k = i + 1; k < j; ++k) c[k] = c[k - 1] + 1;
    }
    return SplitBundle(std::move(ds));
}

K0Class lambda_minus_one(const SplitBundle& w) {
    SplitBundle dual = split_dual(w);
    K0Class acc;
    for (int j = 0; j <= w.rank(); ++j) {
        K0Class term = k0(split_exterior_power(dual, j));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

K0Class forgetful_hyperbolic(const K0Class& x, long long l, int shift) {
    K0Class mirror = x.dual().twist(l);
    return (shift % 2 == 0) ? x + mirror : x - mirror;
}

K0Class euler_forgetful_k0(const SplitBundle& v) {
    if (v.rank() == 0) return {1, 0};
    SplitBundle w(std::vector<int>(v.degrees.begin(), v.degrees.end() - 1));
    return forgetful_hyperbolic(lambda_minus_one(w), -v.degree(), v.rank());
}

EulerForgetful euler_forgetful(const SplitBundle& v) {
    if (v.rank() == 0) throw out_of_range("Euler class of the zero bundle is the unit; nothing to compute");
    int r = v.rank();
    SplitBundle dual = split_dual(v);
    K0Class tail;
    for (int j = 0; j <= (r - 1) / 2; ++j) {
        K0Class term = k0(split_exterior_power(dual, j));
        tail = (j % 2 == 0) ? tail + term : tail - term;
    }
    K0Class way_a = forgetful_hyperbolic(tail, -v.degree(), r);
    if (r % 2 == 0) {
        int s = r / 2;
        K0Class mid = k0(split_exterior_power(dual, s));
        way_a = (s % 2 == 0) ? way_a + mid : way_a - mid;
    }
    K0Class way_b = euler_forgetful_k0(v);
    if (way_a != way_b)
        throw error("explicit Euler formula disagrees with the λ_{-1} representation — bug");
    return EulerForgetful{way_b, way_a, way_b};
}

bool whitney_check_k0(const SplitBundle& v, int summand_degree) {
    auto it = std::find(v.degrees.begin(), v.degrees.end(), summand_degree);
    if (it == v.degrees.end())
        throw not_a_summand("O(" + std::to_string(summand_degree) + ") is not a summand");
    std::vector<int> rest(v.degrees);
    rest.erase(rest.begin() + (it - v.degrees.begin()));
    SplitBundle w(std::move(rest)), n({summand_degree});
    return euler_forgetful_k0(v) == euler_forgetful_k0(w) * euler_forgetful_k0(n);
}

bool dual_identity_check(const SplitBundle& w) {
    K0Class lhs = lambda_minus_one(w).twist(w.degree());
    K0Class rhs = lambda_minus_one(split_dual(w));
    if (w.rank() % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

} // namespace midext
