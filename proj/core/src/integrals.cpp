#include "wordint/integrals.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "wordint/errors.hpp"

using nlohmann::json;

namespace wordint {

namespace {

std::vector<Word> normalize_words(const std::vector<Word>& words) {
    if (words.empty()) throw ParseError("empty word tuple");
    std::vector<Word> out;
    for (const auto& w : words) {
        Word r = cyclic_reduce(w);
        if (r.letters.empty())
            throw ParseError("integrals require nontrivial words (got '" + w.str() +
                             "')");
        out.push_back(std::move(r));
    }
    return out;
}

bool has_odd_exponent(const std::vector<Word>& words) {
    for (const auto& [g, c] : unsigned_exponents(words))
        if (c % 2 != 0) return true;
    return false;
}

// Odometer over one matching choice per generator; `levels` chooses how many
// matchings form each generator's chain (all chains share the same length here).
void for_each_system(const std::vector<Word>& words, int levels,
                     const std::function<void(const MatchingSystem&)>& fn) {
    auto gens = interval_tables(words);
    std::vector<int> gen_ids;
    std::vector<std::vector<Matching>> choices;
    for (const auto& [g, gd] : gens) {
        gen_ids.push_back(g);
        choices.push_back(enumerate_matchings(gd.L));
    }
    const size_t slots = gen_ids.size() * static_cast<size_t>(levels);
    std::vector<size_t> idx(slots, 0);
    MatchingSystem sys;
    while (true) {
        for (size_t s = 0; s < gen_ids.size(); ++s) {
            auto& chain = sys.chains[gen_ids[s]];
            chain.clear();
            for (int l = 0; l < levels; ++l)
                chain.push_back(choices[s][idx[s * levels + l]]);
        }
        fn(sys);
        size_t p = 0;
        while (p < slots) {
            if (++idx[p] < choices[p / levels].size()) break;
            idx[p] = 0;
            ++p;
        }
        if (p == slots) break;
    }
}

}  // namespace

void for_each_kappa1_system(const std::vector<Word>& words,
                            const std::function<void(const MatchingSystem&)>& fn) {
    for_each_system(words, 2, fn);
}

RationalFunction exact_trace_o(const std::vector<Word>& raw, WeingartenEngine& eng) {
    auto words = normalize_words(raw);
    if (has_odd_exponent(words)) return RationalFunction();

    // Group the kappa == 1 systems by (#type-o discs, per-generator coset type);
    // the Weingarten weight only depends on that key.
    std::map<std::pair<int, std::vector<std::vector<int>>>, Int> groups;
    for_each_kappa1_system(words, [&](const MatchingSystem& sys) {
        int o = count_type_o_discs(words, sys);
        std::vector<std::vector<int>> types;
        for (const auto& [g, chain] : sys.chains)
            types.push_back(coset_type(chain[0], chain[1]));
        groups[{o, std::move(types)}] += 1;
    });
    auto gens = interval_tables(words);
    std::vector<int> ls;
    for (const auto& [g, gd] : gens) ls.push_back(gd.L);

    RationalFunction total;
    for (const auto& [key, count] : groups) {
        const auto& [o, types] = key;
        RationalFunction term{Polynomial::monomial(Rat(count), o)};
        for (size_t s = 0; s < types.size(); ++s)
            term = term * eng.wg_o_type(ls[s], types[s]);
        total += term;
    }
    return total;
}

RationalFunction exact_trace_sp(const std::vector<Word>& raw, WeingartenEngine& eng,
                                SpMode mode) {
    auto words = normalize_words(raw);
    if (mode == SpMode::Duality) {
        RationalFunction o = exact_trace_o(words, eng).substitute_scaled(-2);
        return (words.size() % 2 == 0) ? o : -o;
    }
    if (has_odd_exponent(words)) return RationalFunction();

    auto gens = interval_tables(words);
    std::vector<int> ls;
    int sum_l = 0;
    for (const auto& [g, gd] : gens) {
        ls.push_back(gd.L);
        sum_l += gd.L;
    }
    // Key: (#o, per-generator coset types, total sign); sign collects Delta(m),
    // the per-pair sigma signs, and (-1)^{L_x} from Wg^Sp.
    std::map<std::tuple<int, std::vector<std::vector<int>>, int>, Int> groups;
    for_each_kappa1_system(words, [&](const MatchingSystem& sys) {
        int o = count_type_o_discs(words, sys);
        int sign = delta_sign(words, sys);
        if (sum_l % 2 != 0) sign = -sign;
        std::vector<std::vector<int>> types;
        for (const auto& [g, chain] : sys.chains) {
            sign *= sigma_sign(chain[0]) * sigma_sign(chain[1]);
            types.push_back(coset_type(chain[0], chain[1]));
        }
        groups[{o, std::move(types), sign}] += 1;
    });
    RationalFunction total;
    for (const auto& [key, count] : groups) {
        const auto& [o, types, sign] = key;
        // (2n)^o with the collected sign
        Rat c = Rat(count) * sign;
        for (int j = 0; j < o; ++j) c *= 2;
        RationalFunction term{Polynomial::monomial(c, o)};
        for (size_t s = 0; s < types.size(); ++s)
            term = term * eng.wg_sp_type_unsigned(ls[s], types[s]);
        total += term;
    }
    return total;
}

bool duality_check(const std::vector<Word>& words, WeingartenEngine& eng) {
    return exact_trace_sp(words, eng, SpMode::Direct) ==
           exact_trace_sp(words, eng, SpMode::Duality);
}

std::optional<int> chi_max(const std::vector<Word>& raw) {
    auto words = normalize_words(raw);
    if (has_odd_exponent(words)) return std::nullopt;
    int sum_l = 0;
    for (const auto& [g, gd] : interval_tables(words)) sum_l += gd.L;
    std::optional<int> best;
    for_each_system(words, 1, [&](const MatchingSystem& sys) {
        int chi = -sum_l + count_type_o_discs(words, sys);
        if (!best || chi > *best) best = chi;
    });
    return best;
}

SqlClBounds sql_cl_bounds(const Word& w) {
    std::vector<Word> words{w};
    SqlClBounds out;
    auto reduced = normalize_words(words);
    if (has_odd_exponent(reduced)) return out;
    std::optional<int> best_orient, best_nonor;
    for_each_system(reduced, 1, [&](const MatchingSystem& sys) {
        SurfaceDiagram d = build_surface(reduced, sys);
        if (d.components.size() != 1) return;
        int chi = d.chi;
        if (d.orientable) {
            if (!best_orient || chi > *best_orient) best_orient = chi;
        } else if (!best_nonor || chi > *best_nonor) {
            best_nonor = chi;
        }
        // A single cross-cap (one eps = -1 cell) yields a connected non-orientable
        // surface with chi - 1 regardless of orientability.
        if (!best_nonor || chi - 1 > *best_nonor) best_nonor = chi - 1;
    });
    if (best_nonor) out.sql_bound = 1 - *best_nonor;
    if (best_orient) out.cl_bound = (1 - *best_orient) / 2;
    return out;
}

std::map<int, Int> first_laurent_truncated(const std::vector<Word>& raw,
                                           int chi_cutoff) {
    auto words = normalize_words(raw);
    std::map<int, Int> out;
    if (has_odd_exponent(words)) return out;

    auto gens = interval_tables(words);
    std::vector<int> gen_ids;
    int sum_l = 0;
    for (const auto& [g, gd] : gens) {
        gen_ids.push_back(g);
        sum_l += gd.L;
    }
    // chi <= #components <= #words, so total chain weight <= #words - chi_cutoff.
    int weight_cap = static_cast<int>(words.size()) - chi_cutoff;
    if (weight_cap < 0) return out;

    // Chain generating tables per needed matching size: C[a][b][w] = signed count of
    // consecutive-distinct chains a -> b of total rho-weight w.
    std::map<int, std::vector<std::vector<std::vector<Int>>>> chain_gf;
    std::map<int, std::vector<Matching>> m_sets;
    for (const auto& [g, gd] : gens) {
        if (chain_gf.count(gd.L)) continue;
        auto ms = enumerate_matchings(gd.L);
        m_sets[gd.L] = ms;
        const int d = static_cast<int>(ms.size());
        std::vector<std::vector<int>> dist(d, std::vector<int>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) dist[i][j] = rho(ms[i], ms[j]);
        std::vector<std::vector<std::vector<Int>>> c(
            d, std::vector<std::vector<Int>>(d, std::vector<Int>(weight_cap + 1, 0)));
        // length-0 chains
        std::vector<std::vector<std::vector<Int>>> cur = c;
        for (int i = 0; i < d; ++i) {
            cur[i][i][0] = 1;
            c[i][i][0] = 1;
        }
        for (int step = 1; step <= weight_cap; ++step) {
            std::vector<std::vector<std::vector<Int>>> nxt(
                d, std::vector<std::vector<Int>>(d,
                                                 std::vector<Int>(weight_cap + 1, 0)));
            for (int a = 0; a < d; ++a)
                for (int i = 0; i < d; ++i)
                    for (int w = 0; w <= weight_cap; ++w) {
                        if (cur[a][i][w] == 0) continue;
                        for (int t = 0; t < d; ++t) {
                            if (t == i) continue;
                            int w2 = w + dist[i][t];
                            if (w2 <= weight_cap) nxt[a][t][w2] += cur[a][i][w];
                        }
                    }
            cur = std::move(nxt);
            int sign = (step % 2 == 0) ? 1 : -1;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int w = 0; w <= weight_cap; ++w)
                        c[a][b][w] += sign * cur[a][b][w];
        }
        chain_gf[gd.L] = std::move(c);
    }

    // Enumerate outer matching pairs jointly; #o only depends on them.
    for_each_kappa1_system(words, [&](const MatchingSystem& sys) {
        int o = count_type_o_discs(words, sys);
        int chi0 = -sum_l + o;  // chi before chain weight
        if (chi0 < chi_cutoff) return;
        // Convolve the per-generator chain generating functions.
        std::vector<Int> acc(weight_cap + 1, 0);
        acc[0] = 1;
        for (int g : gen_ids) {
            const auto& chain = sys.chains.at(g);
            int L = static_cast<int>(chain[0].size());
            const auto& ms = m_sets[L];
            int ia = static_cast<int>(std::find(ms.begin(), ms.end(), chain[0]) -
                                      ms.begin());
            int ib = static_cast<int>(std::find(ms.begin(), ms.end(), chain[1]) -
                                      ms.begin());
            const auto& gf = chain_gf[L][ia][ib];
            std::vector<Int> nxt(weight_cap + 1, 0);
            for (int w1 = 0; w1 <= weight_cap; ++w1) {
                if (acc[w1] == 0) continue;
                for (int w2 = 0; w1 + w2 <= weight_cap; ++w2)
                    if (gf[w2] != 0) nxt[w1 + w2] += acc[w1] * gf[w2];
            }
            acc = std::move(nxt);
        }
        for (int w = 0; w <= chi0 - chi_cutoff && w <= weight_cap; ++w)
            if (acc[w] != 0) out[chi0 - w] += acc[w];
    });
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

LaurentSeries shifted_coefficients(const std::vector<Word>& words, WeingartenEngine& eng,
                                   char group, int depth, bool* integers_ok) {
    RationalFunction f = (group == 'O')
                             ? exact_trace_o(words, eng)
                             : exact_trace_sp(words, eng, SpMode::Duality);
    Rat center = (group == 'O') ? Rat(1) : Rat(-1, 2);
    LaurentSeries s = laurent_at_infinity_terms(f, center, depth);
    if (integers_ok) {
        *integers_ok = true;
        for (const auto& c : s.coeffs)
            if (c.get_den() != 1) *integers_ok = false;
    }
    return s;
}

bool smatch_shift_check(const std::vector<Word>& raw, const MatchingSystem& m,
                        int depth) {
    auto words = normalize_words(raw);
    for (const auto& [g, chain] : m.chains)
        for (size_t j = 0; j + 1 < chain.size(); ++j)
            if (chain[j] == chain[j + 1])
                throw InternalError(
                    "shift identity requires a reduced system (no consecutive "
                    "duplicate matchings)");
    SurfaceDiagram base = build_surface(words, m);
    const int chi = base.chi;
    const int faces = static_cast<int>(base.faces.size());
    int kappa_base = 0;
    std::vector<int> slot_l;  // rectangle width L_x per duplicable slot (x, k)
    for (const auto& [g, chain] : m.chains) {
        kappa_base += static_cast<int>(chain.size()) - 1;
        for (size_t j = 0; j < chain.size(); ++j)
            slot_l.push_back(static_cast<int>(chain[j].size()));
    }

    // LHS: enumerate duplication vectors d over the slots; for a fixed d, the signed
    // systems contribute (-1)^{kappa_base + sum d} times the count of admissible eps
    // with a given number of -1 cells. That count is the z-coefficient of
    // (1+z)^faces * prod_slots ((1+z)^L - 1)^{d_slot}.
    std::vector<Int> lhs(depth + 1, 0);
    std::vector<Int> pow_faces(depth + 1, 0);  // (1+z)^faces truncated
    for (int j = 0; j <= depth; ++j)
        mpz_bin_uiui(pow_faces[j].get_mpz_t(), faces, j);

    std::function<void(size_t, int, std::vector<Int>)> rec =
        [&](size_t slot, int used, std::vector<Int> poly) {
            if (slot == slot_l.size()) {
                int sign = ((kappa_base + used) % 2 == 0) ? 1 : -1;
                for (int j = 0; j <= depth; ++j)
                    lhs[j] += sign * poly[j];
                return;
            }
            // ((1+z)^L - 1) has no constant term, so each extra duplicate costs at
            // least one -1 cell; stop once the truncation window is exhausted.
            std::vector<Int> factor(depth + 1, 0);
            for (int j = 1; j <= depth && j <= slot_l[slot]; ++j)
                mpz_bin_uiui(factor[j].get_mpz_t(), slot_l[slot], j);
            std::vector<Int> cur = poly;
            rec(slot + 1, used, cur);
            for (int d = 1; used + d <= depth; ++d) {
                std::vector<Int> nxt(depth + 1, 0);
                for (int a = 0; a <= depth; ++a) {
                    if (cur[a] == 0) continue;
                    for (int b = 1; a + b <= depth; ++b) nxt[a + b] += cur[a] * factor[b];
                }
                cur = std::move(nxt);
                bool all_zero = true;
                for (const auto& v : cur)
                    if (v != 0) all_zero = false;
                if (all_zero) break;
                rec(slot + 1, used + d, cur);
            }
        };
    rec(0, 0, pow_faces);

    // RHS: (-1)^{kappa_base} (n+1)^chi expanded in n^{chi - j}.
    for (int j = 0; j <= depth; ++j) {
        Rat binom(1);
        // Note: the two-argument mpq constructor does not canonicalize.
        for (int t = 0; t < j; ++t) {
            Rat term(chi - t, t + 1);
            term.canonicalize();
            binom *= term;
        }
        Rat rhs = binom * ((kappa_base % 2 == 0) ? 1 : -1);
        if (Rat(lhs[j]) != rhs) return false;
    }
    return true;
}

IntegralResult integrate(const std::vector<Word>& raw, WeingartenEngine& eng,
                         char group, const Rat& center, int laurent_depth) {
    IntegralResult r;
    r.words = normalize_words(raw);
    r.group = group;
    int max_l = 0;
    for (const auto& [g, gd] : interval_tables_unchecked(r.words))
        max_l = std::max(max_l, gd.L);
    r.N = max_l;
    if (group == 'O') {
        r.exact = exact_trace_o(r.words, eng);
    } else {
        r.exact = exact_trace_sp(r.words, eng, SpMode::Direct);
        r.duality_ok = (r.exact == exact_trace_sp(r.words, eng, SpMode::Duality));
    }
    r.chi_max = chi_max(r.words);
    r.laurent = laurent_at_infinity_terms(r.exact, center, laurent_depth);
    if (center == 1 && group == 'O') {
        bool ok = true;
        for (const auto& c : r.laurent.coeffs)
            if (c.get_den() != 1) ok = false;
        r.integer_coeffs_ok = ok;
    }
    if (group == 'O') {
        r.limit = limit_counting(r.words);
        Rat constant = r.exact.is_zero() ? Rat(0)
                       : (r.exact.order_at_infinity() > 0
                              ? Rat(0)
                              : laurent_at_infinity_terms(r.exact, 0, 1).coefficient(0));
        r.limit_ok = (constant == Rat(r.limit));
    }
    return r;
}

std::string result_to_json(const IntegralResult& r) {
    json doc;
    json words = json::array();
    for (const auto& w : r.words) words.push_back(w.str());
    doc["words"] = words;
    doc["group"] = (r.group == 'O') ? "O" : "Sp";
    std::vector<std::string> num, den;
    r.exact.integer_form(num, den);
    doc["exact"] = {{"num", num}, {"den", den}};
    doc["N"] = r.N;
    if (r.chi_max)
        doc["chi_max"] = *r.chi_max;
    else
        doc["chi_max"] = nullptr;
    json coeffs = json::array();
    for (size_t i = 0; i < r.laurent.coeffs.size(); ++i) {
        coeffs.push_back({{"exp", r.laurent.lead_exp - static_cast<long>(i)},
                          {"value", r.laurent.coeffs[i].get_str()}});
    }
    doc["laurent"] = {{"center", Rat(r.laurent.center).get_str()}, {"coeffs", coeffs}};
    json checks = json::object();
    if (r.duality_ok) checks["duality"] = *r.duality_ok;
    if (r.integer_coeffs_ok) checks["integer_coeffs"] = *r.integer_coeffs_ok;
    if (r.limit_ok) {
        checks["limit"] = *r.limit_ok;
        doc["limit"] = r.limit.get_str();
    }
    doc["checks"] = checks;
    return doc.dump(2);
}

}  // namespace wordint
