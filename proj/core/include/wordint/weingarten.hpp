#pragma once

#include <map>
#include <string>
#include <vector>

#include "wordint/matching.hpp"
#include "wordint/rational.hpp"

namespace wordint {

// Exact Weingarten functions for O(n) and Sp(n), keyed by coset type. Computed
// tables are cached on disk as versioned JSON, one file per (group, k).
class WeingartenEngine {
  public:
    // cache_dir precedence: explicit argument > WORDINT_CACHE env var > ~/.cache/wordint.
    // An empty resolved directory disables the disk cache.
    explicit WeingartenEngine(std::string cache_dir = "", int k_cap = 4);

    static std::string resolve_cache_dir(const std::string& explicit_dir);

    int k_cap() const { return k_cap_; }
    void set_k_cap(int cap) { k_cap_ = cap; }
    const std::string& cache_dir() const { return cache_dir_; }

    // Gram matrix entry <m1, m2> = n^(k - rho(m1, m2)).
    static Polynomial gram_entry(int k, const Matching& m1, const Matching& m2);

    // Full table for one level: coset type -> value. Group is 'O' or 'S' (Sp).
    // For 'S' the stored value is Wg^O(coset type; -2n); the pair-dependent sign
    // and the (-1)^k factor are applied by wg_sp at lookup time.
    const std::map<std::vector<int>, RationalFunction>& table(char group, int k);

    RationalFunction wg_o(int k, const Matching& m1, const Matching& m2);
    RationalFunction wg_sp(int k, const Matching& m1, const Matching& m2);
    RationalFunction wg_o_type(int k, const std::vector<int>& type);
    RationalFunction wg_sp_type_unsigned(int k, const std::vector<int>& type);

    // Compares the absolutely convergent chain expansion
    //   Wg^O = n^-k sum_l (-1)^l sum_{paths m1 -> m2} n^{-sum rho}
    // against the Laurent expansion of the exact value, through n^{-(k+depth)}.
    bool wg_series_check(int k, const Matching& m1, const Matching& m2, int depth);

    // Decay bound ord_inf Wg^O(m1, m2) >= k + rho(m1, m2) for every coset type.
    bool decay_check(int k);

    struct CacheEntry {
        char group;
        int k;
        std::string path;
    };
    std::vector<CacheEntry> cache_info() const;
    void clear_cache() const;

  private:
    std::map<std::vector<int>, RationalFunction> compute_table_o(int k);
    bool verify_column(int k, const std::map<std::vector<int>, RationalFunction>& tbl);
    bool load_cached(char group, int k, std::map<std::vector<int>, RationalFunction>& out);
    void save_cached(char group, int k,
                     const std::map<std::vector<int>, RationalFunction>& tbl) const;
    std::string cache_path(char group, int k) const;

    std::string cache_dir_;
    int k_cap_;
    std::map<std::pair<char, int>, std::map<std::vector<int>, RationalFunction>> tables_;
};

}  // namespace wordint
