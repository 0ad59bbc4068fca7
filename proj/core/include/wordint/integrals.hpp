#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordint/rational.hpp"
#include "wordint/surface.hpp"
#include "wordint/weingarten.hpp"
#include "wordint/word.hpp"

namespace wordint {

// Exact Haar integral of prod_i Tr(w_i(g)) over O(n), as a rational function of n
// (valid for n >= N = max_x L_x). Zero when some generator has odd total exponent.
RationalFunction exact_trace_o(const std::vector<Word>& words, WeingartenEngine& eng);

enum class SpMode { Direct, Duality };
// Same over Sp(n) (2n x 2n model), either by the direct signed matching formula or
// via the duality Tr^Sp(n) = (-1)^#words Tr^O(-2n).
RationalFunction exact_trace_sp(const std::vector<Word>& words, WeingartenEngine& eng,
                                SpMode mode);

// Symbolic equality of the two Sp routes.
bool duality_check(const std::vector<Word>& words, WeingartenEngine& eng);

// Maximal Euler characteristic over admissible surfaces, computed over the
// kappa == 0 matching systems. nullopt when no admissible surface exists (odd
// exponents).
std::optional<int> chi_max(const std::vector<Word>& words);

struct SqlClBounds {
    std::optional<int> sql_bound;  // nullopt: no non-orientable admissible surface
    std::optional<int> cl_bound;   // nullopt: no orientable admissible surface
};
// Square-length / commutator-length bounds for a single word from the kappa == 0
// census (signed variants with one cross-cap included for the non-orientable side).
SqlClBounds sql_cl_bounds(const Word& w);

// Truncated first Laurent expansion (sum over reduced matching chains of
// (-1)^{|kappa|} n^{chi}): integer coefficient of n^e for every e >= chi_cutoff.
std::map<int, Int> first_laurent_truncated(const std::vector<Word>& words,
                                           int chi_cutoff);

// Laurent expansion of the exact integral at the shifted center (1 for O, -1/2 for
// Sp), `depth` terms from the leading exponent. For O the coefficients are proved
// integral; *integers_ok reports the verification.
LaurentSeries shifted_coefficients(const std::vector<Word>& words, WeingartenEngine& eng,
                                   char group, int depth, bool* integers_ok);

// Local shift identity: the truncated sum over signed systems (m', eps) collapsing
// to the given kappa == 1 system m of (-1)^{|kappa'|} n^{chi(Sigma_{m',eps})}
// must match (-1)^{|kappa|} (n+1)^{chi(Sigma_m)} through the first `depth + 1`
// coefficients.
bool smatch_shift_check(const std::vector<Word>& words, const MatchingSystem& m,
                        int depth);

struct IntegralResult {
    std::vector<Word> words;
    char group = 'O';
    RationalFunction exact;
    int N = 0;
    std::optional<int> chi_max;
    LaurentSeries laurent;
    std::optional<bool> duality_ok;
    std::optional<bool> integer_coeffs_ok;
    std::optional<bool> limit_ok;
    mpz_class limit = 0;
};

// Full result document: exact value, Laurent expansion at the given center, limit
// and (for Sp) duality checks.
IntegralResult integrate(const std::vector<Word>& words, WeingartenEngine& eng,
                         char group, const Rat& center, int laurent_depth);

std::string result_to_json(const IntegralResult& r);

// Shared enumeration helper: visit every kappa == 1 matching system.
void for_each_kappa1_system(const std::vector<Word>& words,
                            const std::function<void(const MatchingSystem&)>& fn);

}  // namespace wordint
