#pragma once

#include <utility>
#include <vector>

namespace wordint {

// A perfect matching of {0, ..., 2k-1} in canonical ordered-pair form: each pair
// (a, b) has a < b and the pair firsts are strictly increasing. M_k has (2k-1)!!
// elements.
using Matching = std::vector<std::pair<int, int>>;

// Enumeration cap: |M_5| = 945 is the largest set enumerated by default.
inline constexpr int kMatchingCapDefault = 5;

// All matchings of [2k] in the canonical (lexicographic) order.
std::vector<Matching> enumerate_matchings(int k, int cap = kMatchingCapDefault);

// Involution pi_m as an image table of size 2k.
std::vector<int> pi(const Matching& m);
// Embedding sigma_m: position i -> m_(i+1) (so sigma[2t] = first of pair t,
// sigma[2t+1] = second of pair t) as an image table of size 2k.
std::vector<int> sigma(const Matching& m);
// Sign of sigma_m.
int sigma_sign(const Matching& m);
int permutation_sign(const std::vector<int>& perm);

// Collins-Sniady distance rho(m1, m2) = k - (#cycles of pi_m1 pi_m2) / 2.
int rho(const Matching& m1, const Matching& m2);
// Coset type of (m1, m2): the partition of k formed by half of the (paired) cycle
// type of pi_m1 pi_m2, in decreasing order.
std::vector<int> coset_type(const Matching& m1, const Matching& m2);

// Canonical first element of M_k: {(0,1), (2,3), ...}.
Matching identity_matching(int k);

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g);

}  // namespace wordint
