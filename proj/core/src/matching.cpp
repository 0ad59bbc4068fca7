#include "wordint/matching.hpp"

#include <algorithm>

#include "wordint/errors.hpp"

namespace wordint {

namespace {

void enumerate_rec(int two_k, std::vector<int>& partner, Matching& current,
                   std::vector<Matching>& out) {
    int a = 0;
    while (a < two_k && partner[a] >= 0) ++a;
    if (a == two_k) {
        out.push_back(current);
        return;
    }
    for (int b = a + 1; b < two_k; ++b) {
        if (partner[b] >= 0) continue;
        partner[a] = b;
        partner[b] = a;
        current.emplace_back(a, b);
        enumerate_rec(two_k, partner, current, out);
        current.pop_back();
        partner[a] = -1;
        partner[b] = -1;
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int k, int cap) {
    if (k < 0) throw InternalError("enumerate_matchings: negative k");
    if (k > cap)
        throw CapExceeded("matching enumeration for k = " + std::to_string(k) +
                          " exceeds the cap of " + std::to_string(cap));
    std::vector<Matching> out;
    std::vector<int> partner(2 * k, -1);
    Matching current;
    enumerate_rec(2 * k, partner, current, out);
    return out;
}

std::vector<int> pi(const Matching& m) {
    std::vector<int> p(2 * m.size());
    for (const auto& [a, b] : m) {
        p[a] = b;
        p[b] = a;
    }
    return p;
}

std::vector<int> sigma(const Matching& m) {
    std::vector<int> s(2 * m.size());
    for (size_t t = 0; t < m.size(); ++t) {
        s[2 * t] = m[t].first;
        s[2 * t + 1] = m[t].second;
    }
    return s;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int sigma_sign(const Matching& m) { return permutation_sign(sigma(m)); }

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

namespace {

std::vector<int> product_cycle_lengths(const Matching& m1, const Matching& m2) {
    auto prod = compose(pi(m1), pi(m2));
    std::vector<bool> seen(prod.size(), false);
    std::vector<int> lengths;
    for (size_t i = 0; i < prod.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = prod[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

}  // namespace

int rho(const Matching& m1, const Matching& m2) {
    if (m1.size() != m2.size()) throw InternalError("rho: size mismatch");
    auto lengths = product_cycle_lengths(m1, m2);
    return static_cast<int>(m1.size()) - static_cast<int>(lengths.size()) / 2;
}

std::vector<int> coset_type(const Matching& m1, const Matching& m2) {
    auto lengths = product_cycle_lengths(m1, m2);
    // Cycles of pi_m1 pi_m2 come in equal-length pairs; keep one from each pair.
    if (lengths.size() % 2 != 0)
        throw InternalError("coset_type: odd number of product cycles");
    std::vector<int> type;
    for (size_t i = 0; i < lengths.size(); i += 2) {
        if (lengths[i] != lengths[i + 1])
            throw InternalError("coset_type: unpaired product cycles");
        type.push_back(lengths[i]);
    }
    return type;
}

Matching identity_matching(int k) {
    Matching m;
    for (int t = 0; t < k; ++t) m.emplace_back(2 * t, 2 * t + 1);
    return m;
}

}  // namespace wordint
