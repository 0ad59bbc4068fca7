#include "wordint/weingarten.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "wordint/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace wordint {

WeingartenEngine::WeingartenEngine(std::string cache_dir, int k_cap)
    : cache_dir_(resolve_cache_dir(cache_dir)), k_cap_(k_cap) {}

std::string WeingartenEngine::resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("WORDINT_CACHE")) return env;
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "wordint").string();
    return "";
}

Polynomial WeingartenEngine::gram_entry(int k, const Matching& m1, const Matching& m2) {
    return Polynomial::monomial(1, k - rho(m1, m2));
}

std::string WeingartenEngine::cache_path(char group, int k) const {
    if (cache_dir_.empty()) return "";
    std::string g = (group == 'O') ? "O" : "Sp";
    return (fs::path(cache_dir_) / ("wg_" + g + "_" + std::to_string(k) + ".json"))
        .string();
}

const std::map<std::vector<int>, RationalFunction>& WeingartenEngine::table(char group,
                                                                            int k) {
    if (group != 'O' && group != 'S') throw InternalError("unknown group");
    if (k > k_cap_)
        throw CapExceeded("Weingarten level k = " + std::to_string(k) +
                          " exceeds the cap of " + std::to_string(k_cap_) +
                          " (raise with --k-cap, hard limit 5)");
    auto key = std::make_pair(group, k);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;

    std::map<std::vector<int>, RationalFunction> tbl;
    if (!load_cached(group, k, tbl)) {
        if (group == 'O') {
            tbl = compute_table_o(k);
        } else {
            // Wg^Sp values are Wg^O at -2n up to a lookup-time sign.
            const auto& o_tbl = table('O', k);
            for (const auto& [type, f] : o_tbl) tbl[type] = f.substitute_scaled(-2);
        }
        save_cached(group, k, tbl);
    }
    return tables_[key] = std::move(tbl);
}

std::map<std::vector<int>, RationalFunction> WeingartenEngine::compute_table_o(int k) {
    auto all = enumerate_matchings(k);
    Matching id = identity_matching(k);
    const int d = static_cast<int>(all.size());

    // Group M_k by coset type against the identity matching.
    std::map<std::vector<int>, int> type_index;
    std::vector<int> type_of(d);
    std::vector<std::vector<int>> types;
    std::vector<int> rep;  // representative matching index per type
    for (int i = 0; i < d; ++i) {
        auto t = coset_type(all[i], id);
        auto [it, inserted] = type_index.try_emplace(t, static_cast<int>(types.size()));
        if (inserted) {
            types.push_back(t);
            rep.push_back(i);
        }
        type_of[i] = it->second;
    }
    const int nt = static_cast<int>(types.size());

    // Collapsed system over class functions: one equation per representative row of
    // Gram * wg = e_id. The class-function ansatz is discharged by verify_column,
    // which checks every row of the full system afterwards.
    std::vector<std::vector<Polynomial>> a(nt, std::vector<Polynomial>(nt));
    std::vector<Polynomial> b(nt);
    for (int r = 0; r < nt; ++r) {
        std::vector<std::vector<int>> counts(nt, std::vector<int>(k + 1, 0));
        for (int m = 0; m < d; ++m) counts[type_of[m]][rho(all[rep[r]], all[m])]++;
        for (int c = 0; c < nt; ++c) {
            Polynomial acc;
            for (int p = 0; p <= k; ++p)
                if (counts[c][p] > 0)
                    acc += Polynomial::monomial(counts[c][p], k - p);
            a[r][c] = acc;
        }
        b[r] = Polynomial(all[rep[r]] == id ? 1 : 0);
    }
    auto sol = solve_linear(std::move(a), std::move(b));
    std::map<std::vector<int>, RationalFunction> tbl;
    for (int c = 0; c < nt; ++c) tbl[types[c]] = sol[c];

    if (!verify_column(k, tbl))
        throw InternalError("Weingarten column failed the exact Gram verification");

    // Independent cross-check at small sizes: full fraction-free unit-vector solve.
    if (d <= 15) {
        std::vector<std::vector<Polynomial>> full(d, std::vector<Polynomial>(d));
        std::vector<Polynomial> e(d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) full[i][j] = gram_entry(k, all[i], all[j]);
            e[i] = Polynomial(all[i] == id ? 1 : 0);
        }
        auto col = solve_linear(std::move(full), std::move(e));
        for (int i = 0; i < d; ++i) {
            if (col[i] != tbl[types[type_of[i]]])
                throw InternalError("class-function dedup disagrees with full solve");
        }
    }
    return tbl;
}

bool WeingartenEngine::verify_column(
    int k, const std::map<std::vector<int>, RationalFunction>& tbl) {
    auto all = enumerate_matchings(k);
    Matching id = identity_matching(k);
    const int d = static_cast<int>(all.size());
    std::vector<const RationalFunction*> val(d);
    for (int m = 0; m < d; ++m) {
        auto it = tbl.find(coset_type(all[m], id));
        if (it == tbl.end()) return false;
        val[m] = &it->second;
    }
    for (int r = 0; r < d; ++r) {
        // Group the row sum by (rho, value) to keep the rational arithmetic small.
        std::map<const RationalFunction*, std::vector<int>> counts;
        for (int m = 0; m < d; ++m) {
            auto& cnt = counts[val[m]];
            cnt.resize(k + 1, 0);
            cnt[rho(all[r], all[m])]++;
        }
        RationalFunction acc;
        for (const auto& [f, cnt] : counts) {
            Polynomial p;
            for (int j = 0; j <= k && j < static_cast<int>(cnt.size()); ++j)
                if (cnt[j] > 0) p += Polynomial::monomial(cnt[j], k - j);
            acc += RationalFunction(p) * (*f);
        }
        if (acc != RationalFunction(Polynomial(all[r] == id ? 1 : 0))) return false;
    }
    return true;
}

RationalFunction WeingartenEngine::wg_o_type(int k, const std::vector<int>& type) {
    const auto& tbl = table('O', k);
    auto it = tbl.find(type);
    if (it == tbl.end()) throw InternalError("unknown coset type");
    return it->second;
}

RationalFunction WeingartenEngine::wg_sp_type_unsigned(int k,
                                                       const std::vector<int>& type) {
    const auto& tbl = table('S', k);
    auto it = tbl.find(type);
    if (it == tbl.end()) throw InternalError("unknown coset type");
    return it->second;
}

RationalFunction WeingartenEngine::wg_o(int k, const Matching& m1, const Matching& m2) {
    return wg_o_type(k, coset_type(m1, m2));
}

RationalFunction WeingartenEngine::wg_sp(int k, const Matching& m1, const Matching& m2) {
    int sgn = sigma_sign(m1) * sigma_sign(m2) * (k % 2 == 0 ? 1 : -1);
    RationalFunction f = wg_sp_type_unsigned(k, coset_type(m1, m2));
    return sgn > 0 ? f : -f;
}

bool WeingartenEngine::wg_series_check(int k, const Matching& m1, const Matching& m2,
                                       int depth) {
    auto all = enumerate_matchings(k);
    const int d = static_cast<int>(all.size());
    int i1 = -1, i2 = -1;
    for (int i = 0; i < d; ++i) {
        if (all[i] == m1) i1 = i;
        if (all[i] == m2) i2 = i;
    }
    if (i1 < 0 || i2 < 0) throw InternalError("wg_series_check: matchings not in M_k");
    std::vector<std::vector<int>> dist(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) dist[i][j] = rho(all[i], all[j]);

    // coeff[j] = sum over chains m1 -> m2 of total weight j of (-1)^length.
    std::vector<Int> coeff(depth + 1, 0);
    std::vector<std::vector<Int>> cur(d, std::vector<Int>(depth + 1, 0));
    cur[i1][0] = 1;  // the empty chain
    for (int j = 0; j <= depth; ++j) coeff[j] += cur[i2][j];
    for (int step = 1; step <= depth; ++step) {  // each step adds weight >= 1
        std::vector<std::vector<Int>> nxt(d, std::vector<Int>(depth + 1, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j <= depth; ++j) {
                if (cur[i][j] == 0) continue;
                for (int t = 0; t < d; ++t) {
                    if (t == i) continue;
                    int w = j + dist[i][t];
                    if (w <= depth) nxt[t][w] += cur[i][j];
                }
            }
        cur = std::move(nxt);
        int sign = (step % 2 == 0) ? 1 : -1;
        for (int j = 0; j <= depth; ++j) coeff[j] += sign * cur[i2][j];
    }
    RationalFunction f = wg_o(k, m1, m2);
    LaurentSeries s = laurent_at_infinity(f, 0, -(k + depth));
    for (int j = 0; j <= depth; ++j) {
        if (s.coefficient(-(k + j)) != Rat(coeff[j])) return false;
    }
    return true;
}

bool WeingartenEngine::decay_check(int k) {
    const auto& tbl = table('O', k);
    for (const auto& [type, f] : tbl) {
        int r = k - static_cast<int>(type.size());  // rho for this coset type
        if (!f.is_zero() && f.order_at_infinity() < k + r) return false;
    }
    return true;
}

bool WeingartenEngine::load_cached(char group, int k,
                                   std::map<std::vector<int>, RationalFunction>& out) {
    std::string path = cache_path(group, k);
    if (path.empty() || !fs::exists(path)) return false;
    try {
        std::ifstream in(path);
        json doc = json::parse(in);
        if (doc.at("version").get<int>() != 1) return false;
        if (doc.at("k").get<int>() != k) return false;
        std::string g = doc.at("group").get<std::string>();
        if ((group == 'O' && g != "O") || (group == 'S' && g != "Sp")) return false;
        std::map<std::vector<int>, RationalFunction> tbl;
        for (const auto& entry : doc.at("entries")) {
            auto type = entry.at("coset_type").get<std::vector<int>>();
            auto num = entry.at("num").get<std::vector<std::string>>();
            auto den = entry.at("den").get<std::vector<std::string>>();
            tbl[type] = RationalFunction::from_integer_form(num, den);
        }
        // Never trust cache contents: re-verify the defining identity exactly
        // (for Sp, after undoing the n -> -2n substitution).
        std::map<std::vector<int>, RationalFunction> as_o;
        for (const auto& [type, f] : tbl)
            as_o[type] = (group == 'O') ? f : f.substitute_scaled(Rat(-1, 2));
        if (!verify_column(k, as_o)) return false;
        out = std::move(tbl);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void WeingartenEngine::save_cached(
    char group, int k, const std::map<std::vector<int>, RationalFunction>& tbl) const {
    std::string path = cache_path(group, k);
    if (path.empty()) return;
    try {
        fs::create_directories(fs::path(path).parent_path());
        json entries = json::array();
        for (const auto& [type, f] : tbl) {
            std::vector<std::string> num, den;
            f.integer_form(num, den);
            entries.push_back({{"coset_type", type}, {"num", num}, {"den", den}});
        }
        json doc = {{"version", 1},
                    {"group", group == 'O' ? "O" : "Sp"},
                    {"k", k},
                    {"entries", entries}};
        std::ofstream outf(path);
        outf << doc.dump(2) << "\n";
    } catch (const std::exception&) {
        // The cache is best-effort; failures to persist are not errors.
    }
}

std::vector<WeingartenEngine::CacheEntry> WeingartenEngine::cache_info() const {
    std::vector<CacheEntry> out;
    if (cache_dir_.empty() || !fs::exists(cache_dir_)) return out;
    for (char g : {'O', 'S'}) {
        for (int k = 1; k <= 5; ++k) {
            std::string p = cache_path(g, k);
            if (fs::exists(p)) out.push_back({g, k, p});
        }
    }
    return out;
}

void WeingartenEngine::clear_cache() const {
    for (const auto& e : cache_info()) fs::remove(e.path);
}

}  // namespace wordint
