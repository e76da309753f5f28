#include "strata/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

long sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void check_angles(const std::vector<int>& C, const std::vector<int>& b) {
    if (C.size() != b.size()) throw ValidationError("angle tuple size mismatch");
    for (size_t i = 0; i < C.size(); ++i)
        if (C[i] < 1 || C[i] > b[i] - 1)
            throw ValidationError("angle C out of range [1, b-1]");
}

void check_arrangement(const std::vector<int>& tau, int n) {
    if (static_cast<int>(tau.size()) != n) throw ValidationError("arrangement size mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int label : tau) {
        if (label < 1 || label > n || seen[static_cast<size_t>(label) - 1])
            throw ValidationError("arrangement is not a permutation of labels");
        seen[static_cast<size_t>(label) - 1] = 1;
    }
}

// All tuples C with 1 <= C_i <= b_i - 1, optionally filtered to sum C = target.
// -1 means "no sum constraint".
std::vector<std::vector<int>> angle_tuples(const std::vector<int>& b, long target) {
    std::vector<std::vector<int>> out;
    std::vector<int> C(b.size(), 1);
    if (b.empty()) {
        if (target < 0 || target == 0) out.push_back({});
        return out;
    }
    // A simple residueless pole admits no cylinder angle: empty result.
    if (std::any_of(b.begin(), b.end(), [](int x) { return x < 2; })) return out;
    while (true) {
        if (target < 0 || sum(C) == target) out.push_back(C);
        size_t k = 0;
        while (k < C.size() && C[k] == b[k] - 1) C[k++] = 1;
        if (k == C.size()) break;
        ++C[k];
    }
    return out;
}

} // namespace

void validate(const CycleSurface& z) {
    if (z.a1 < 0 || z.a2 < 0) throw ValidationError("zero orders must be non-negative");
    if (z.n() < 1) throw ValidationError("cycle surface needs at least one pole");
    if (z.a1 + z.a2 != sum(z.b) - 2) throw ValidationError("cycle surface degree mismatch");
    check_arrangement(z.tau, z.n());
    check_angles(z.C, z.b);
    if (sum(z.C) != z.a1 + 1) throw ValidationError("cycle surface angles must sum to a1+1");
}

void validate(const ChainSurface& z) {
    if (z.a < 0) throw ValidationError("zero order must be non-negative");
    if (z.e1 < 1 || z.e2 < 1) throw ValidationError("residue-pair orders must be positive");
    if (z.a != z.e1 + z.e2 + sum(z.b) - 2) throw ValidationError("chain surface degree mismatch");
    check_arrangement(z.tau, z.n());
    check_angles(z.C, z.b);
}

std::vector<CycleSurface> enumerate_z1(int a1, int a2, const std::vector<int>& pole_orders) {
    if (a1 < 0 || a2 < 0) throw ValidationError("zero orders must be non-negative");
    if (pole_orders.empty()) throw ValidationError("cycle surface needs at least one pole");
    if (a1 + a2 != sum(pole_orders) - 2) throw ValidationError("cycle surface degree mismatch");

    std::vector<CycleSurface> out;
    const int n = static_cast<int>(pole_orders.size());

    // Cyclic orders up to rotation: pin label 1 in front, permute the rest.
    std::vector<int> rest(static_cast<size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    auto angles = angle_tuples(pole_orders, a1 + 1);
    do {
        std::vector<int> tau{1};
        tau.insert(tau.end(), rest.begin(), rest.end());
        for (const auto& C : angles) {
            CycleSurface z{a1, a2, pole_orders, tau, C};
            validate(z);
            out.push_back(std::move(z));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<ChainSurface> enumerate_z2(int a, const std::vector<int>& residueless_orders,
                                       int e1, int e2) {
    if (e1 < 1 || e2 < 1) throw ValidationError("residue-pair orders must be positive");
    if (a != e1 + e2 + sum(residueless_orders) - 2)
        throw ValidationError("chain surface degree mismatch");

    std::vector<ChainSurface> out;
    const int n = static_cast<int>(residueless_orders.size());
    std::vector<int> tau(static_cast<size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    auto angles = angle_tuples(residueless_orders, -1);
    do {
        for (const auto& C : angles) {
            ChainSurface z{a, e1, e2, residueless_orders, tau, C};
            validate(z);
            out.push_back(std::move(z));
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

} // namespace strata
