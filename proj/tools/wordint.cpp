// wordint: exact Haar integrals of products of word traces over O(n) and Sp(n).
//
// Exit codes: 0 success, 2 parse/usage error, 3 size cap exceeded, 4 failed
// internal check.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordint/errors.hpp"
#include "wordint/integrals.hpp"
#include "wordint/montecarlo.hpp"
#include "wordint/weingarten.hpp"

using namespace wordint;
using nlohmann::json;

namespace {

struct Config {
    std::string cache_dir;
    int k_cap = 4;
    int laurent_depth = 6;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "cache_dir")
                cfg.cache_dir = val;
            else if (key == "k_cap")
                cfg.k_cap = std::stoi(val);
            else if (key == "laurent_depth")
                cfg.laurent_depth = std::stoi(val);
            else if (key == "samples")
                cfg.samples = std::stoull(val);
            else if (key == "seed")
                cfg.seed = std::stoull(val);
            else if (key == "workers")
                cfg.workers = std::stoi(val);
            else
                throw ParseError("config line " + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ParseError("config line " + std::to_string(lineno) + ": bad value");
        }
    }
    return cfg;
}

std::vector<Word> parse_words(const std::vector<std::string>& args) {
    std::vector<Word> out;
    for (const auto& a : args) out.push_back(parse_word(a));
    return out;
}

char parse_group(const std::string& g) {
    if (g == "O" || g == "o") return 'O';
    if (g == "Sp" || g == "sp" || g == "SP" || g == "S") return 'S';
    throw ParseError("unknown group '" + g + "' (expected O or Sp)");
}

std::string opt_int_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

const std::vector<std::vector<std::string>> kExampleTuples = {
    {"aabb"},         {"aaaabbbb"},          {"[a,b]^2"},
    {"ab^3A B"},      {"ab^4Ab^-2"},         {"aba^2ba^3b^2"},
    {"aabb", "aabb"}, {"aab", "aab"},        {"aabb", "aabb", "aabb"},
};

int run(int argc, char** argv) {
    CLI::App app{"Exact word-trace integrals over O(n) and Sp(n)"};
    app.require_subcommand(1);
    app.allow_extras();  // catches word arguments passed through from subcommands

    std::string config_path, cache_dir_flag, group_str = "O", center_str;
    bool as_json = false;
    int k_cap_flag = -1;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--cache-dir", cache_dir_flag,
                   "Weingarten cache directory (also WORDINT_CACHE)");
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--k-cap", k_cap_flag, "Weingarten level cap (default 4, max 5)");

    std::vector<std::string> word_args;
    int depth_flag = -1;
    long mc_n = 5;
    std::uint64_t samples_flag = 0, seed_flag = 0;
    bool seed_given = false, samples_given = false;
    int workers_flag = 0, wg_k = 2;

    auto* cmd_exact = app.add_subcommand("exact", "exact integral of a word tuple");
    cmd_exact->allow_extras()->fallthrough();  // word arguments; collected via remaining()
    cmd_exact->add_option("--group", group_str, "O or Sp");

    auto* cmd_laurent =
        app.add_subcommand("laurent", "Laurent expansion of the exact integral");
    cmd_laurent->allow_extras()->fallthrough();  // word arguments; collected via remaining()
    cmd_laurent->add_option("--group", group_str, "O or Sp");
    cmd_laurent->add_option("--center", center_str,
                            "expansion center c: powers of (n-c)^-1 (default 0; "
                            "use 1 for the shifted O expansion, -1/2 for Sp)");
    cmd_laurent->add_option("--depth", depth_flag, "number of reported terms");

    auto* cmd_chimax =
        app.add_subcommand("chimax", "maximal Euler characteristic and genus bounds");
    cmd_chimax->allow_extras()->fallthrough();  // word arguments; collected via remaining()

    auto* cmd_limit = app.add_subcommand("limit", "large-n limit by pair counting");
    cmd_limit->allow_extras()->fallthrough();  // word arguments; collected via remaining()

    auto* cmd_duality =
        app.add_subcommand("duality", "check Tr^Sp(n) = (-1)^l Tr^O(-2n) symbolically");
    cmd_duality->allow_extras()->fallthrough();  // word arguments; collected via remaining()

    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo validation of the exact value");
    cmd_mc->allow_extras()->fallthrough();  // word arguments; collected via remaining()
    cmd_mc->add_option("--group", group_str, "O or Sp");
    cmd_mc->add_option("--n", mc_n, "matrix size parameter n")->required();
    cmd_mc->add_option("--samples", samples_flag)->each([&](const std::string&) {
        samples_given = true;
    });
    cmd_mc->add_option("--seed", seed_flag)->each([&](const std::string&) {
        seed_given = true;
    });
    cmd_mc->add_option("--workers", workers_flag);

    auto* cmd_wg = app.add_subcommand("wg", "Weingarten table for one level");
    cmd_wg->add_option("--group", group_str, "O or Sp");
    cmd_wg->add_option("--k", wg_k, "level (matching size)")->required();

    auto* cmd_table =
        app.add_subcommand("table", "exact values for the built-in example tuples");

    auto* cmd_cache = app.add_subcommand("cache", "Weingarten cache maintenance");
    auto* cmd_cache_info = cmd_cache->add_subcommand("info", "list cache files");
    auto* cmd_cache_clear = cmd_cache->add_subcommand("clear", "remove cache files");
    cmd_cache->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool takes_words = false;
    for (CLI::App* c : {cmd_exact, cmd_laurent, cmd_chimax, cmd_limit, cmd_duality, cmd_mc})
        if (c->parsed()) {
            takes_words = true;
            word_args = c->remaining();
            for (const auto& a : app.remaining()) word_args.push_back(a);
            if (word_args.empty()) throw ParseError("at least one word is required");
        }
    if (!takes_words && !app.remaining().empty())
        throw ParseError("unexpected argument '" + app.remaining().front() + "'");

    Config cfg = load_config(config_path);
    if (!cache_dir_flag.empty()) cfg.cache_dir = cache_dir_flag;
    if (k_cap_flag > 0) cfg.k_cap = k_cap_flag;
    if (depth_flag > 0) cfg.laurent_depth = depth_flag;
    if (samples_given) cfg.samples = samples_flag;
    if (seed_given) cfg.seed = seed_flag;
    if (workers_flag > 0) cfg.workers = workers_flag;
    if (cfg.k_cap > 5) throw CapExceeded("k-cap beyond 5 is not supported");

    WeingartenEngine eng(cfg.cache_dir, cfg.k_cap);
    char group = parse_group(group_str);

    if (*cmd_exact) {
        auto words = parse_words(word_args);
        IntegralResult r = integrate(words, eng, group, Rat(0), cfg.laurent_depth);
        if (as_json) {
            std::cout << result_to_json(r) << "\n";
        } else {
            std::cout << "exact   = " << r.exact.factored_str() << "\n";
            std::cout << "valid   for n >= " << r.N << (group == 'S' ? " (2n >= N)" : "")
                      << "\n";
            std::cout << "chi_max = " << opt_int_str(r.chi_max) << "\n";
            if (r.limit_ok) std::cout << "limit   = " << r.limit.get_str() << "\n";
            if (r.duality_ok)
                std::cout << "duality check: " << (*r.duality_ok ? "OK" : "FAIL") << "\n";
        }
        if (r.duality_ok && !*r.duality_ok)
            throw InternalError("Sp duality check failed");
        if (r.limit_ok && !*r.limit_ok) throw InternalError("limit check failed");
        return 0;
    }
    if (*cmd_laurent) {
        auto words = parse_words(word_args);
        Rat center(0);
        if (!center_str.empty()) center = Rat(center_str);
        center.canonicalize();
        IntegralResult r = integrate(words, eng, group, center, cfg.laurent_depth);
        if (as_json) {
            std::cout << result_to_json(r) << "\n";
        } else {
            std::cout << "exact   = " << r.exact.factored_str() << "\n";
            std::cout << "laurent = " << r.laurent.str() << "\n";
            if (r.integer_coeffs_ok)
                std::cout << "integer coefficients: "
                          << (*r.integer_coeffs_ok ? "OK" : "FAIL") << "\n";
        }
        if (r.integer_coeffs_ok && !*r.integer_coeffs_ok)
            throw InternalError("shifted coefficients are not integers");
        return 0;
    }
    if (*cmd_chimax) {
        auto words = parse_words(word_args);
        auto cm = chi_max(words);
        json doc;
        doc["chi_max"] = cm ? json(*cm) : json(nullptr);
        std::ostringstream text;
        text << "chi_max = " << opt_int_str(cm) << "\n";
        if (words.size() == 1) {
            auto b = sql_cl_bounds(words[0]);
            doc["sql_bound"] = b.sql_bound ? json(*b.sql_bound) : json(nullptr);
            doc["cl_bound"] = b.cl_bound ? json(*b.cl_bound) : json(nullptr);
            text << "sql <= " << opt_int_str(b.sql_bound) << ", cl <= "
                 << opt_int_str(b.cl_bound) << "\n";
        }
        std::cout << (as_json ? doc.dump(2) + "\n" : text.str());
        return 0;
    }
    if (*cmd_limit) {
        auto words = parse_words(word_args);
        mpz_class lim = limit_counting(words);
        if (as_json) {
            json doc{{"limit", lim.get_str()}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "limit = " << lim.get_str() << "\n";
        }
        return 0;
    }
    if (*cmd_duality) {
        auto words = parse_words(word_args);
        RationalFunction direct = exact_trace_sp(words, eng, SpMode::Direct);
        RationalFunction via_o = exact_trace_sp(words, eng, SpMode::Duality);
        bool ok = (direct == via_o);
        if (as_json) {
            std::vector<std::string> n1, d1;
            direct.integer_form(n1, d1);
            json doc{{"duality", ok}, {"sp", {{"num", n1}, {"den", d1}}}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "Tr^Sp (direct) = " << direct.factored_str() << "\n";
            std::cout << "duality check: " << (ok ? "OK" : "FAIL") << "\n";
        }
        if (!ok) throw InternalError("Sp duality check failed");
        return 0;
    }
    if (*cmd_mc) {
        auto words = parse_words(word_args);
        RationalFunction exact = (group == 'O')
                                     ? exact_trace_o(words, eng)
                                     : exact_trace_sp(words, eng, SpMode::Duality);
        Rat at = exact.is_pole(mc_n) ? Rat(0) : exact.evaluate(mc_n);
        McEstimate est =
            mc_estimate(words, group, static_cast<int>(mc_n), cfg.samples, cfg.seed,
                        cfg.workers);
        double exact_d = at.get_d();
        double z = est.std_error > 0 ? (est.mean - exact_d) / est.std_error : 0.0;
        if (as_json) {
            json doc{{"mean", est.mean},     {"std_error", est.std_error},
                     {"samples", est.samples}, {"exact", exact_d},
                     {"z", z},               {"seed", cfg.seed}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "estimate = " << est.mean << " +- " << est.std_error << " ("
                      << est.samples << " samples, seed " << cfg.seed << ")\n";
            std::cout << "exact    = " << exact_d << "   z = " << z << "\n";
        }
        return 0;
    }
    if (*cmd_wg) {
        auto ms = enumerate_matchings(wg_k);
        const auto& tbl = eng.table(group, wg_k);
        json entries = json::array();
        for (const auto& [type, f] : tbl) {
            RationalFunction shown = f;
            if (group == 'S' && wg_k % 2 != 0) shown = -shown;  // fold in (-1)^k
            if (as_json) {
                std::vector<std::string> n1, d1;
                shown.integer_form(n1, d1);
                entries.push_back({{"coset_type", type}, {"num", n1}, {"den", d1}});
            } else {
                std::cout << "[";
                for (size_t i = 0; i < type.size(); ++i)
                    std::cout << (i ? "," : "") << type[i];
                std::cout << "] : " << shown.factored_str() << "\n";
            }
        }
        if (as_json) {
            json doc{{"group", group == 'O' ? "O" : "Sp"},
                     {"k", wg_k},
                     {"matchings", ms.size()},
                     {"entries", entries}};
            std::cout << doc.dump(2) << "\n";
        }
        return 0;
    }
    if (*cmd_table) {
        json rows = json::array();
        for (const auto& tuple : kExampleTuples) {
            auto words = parse_words(tuple);
            RationalFunction f = exact_trace_o(words, eng);
            auto cm = chi_max(words);
            if (as_json) {
                std::vector<std::string> n1, d1;
                f.integer_form(n1, d1);
                json row{{"words", tuple},
                         {"exact", {{"num", n1}, {"den", d1}}},
                         {"chi_max", cm ? json(*cm) : json(nullptr)}};
                rows.push_back(row);
            } else {
                std::string label;
                for (size_t i = 0; i < tuple.size(); ++i)
                    label += (i ? ", " : "") + tuple[i];
                std::cout << label << "\n    Tr^O = " << f.factored_str()
                          << "    (chi_max " << opt_int_str(cm) << ")\n";
            }
        }
        if (as_json) std::cout << rows.dump(2) << "\n";
        return 0;
    }
    if (*cmd_cache) {
        if (*cmd_cache_info) {
            auto info = eng.cache_info();
            if (as_json) {
                json doc = json::array();
                for (const auto& e : info)
                    doc.push_back({{"group", e.group == 'O' ? "O" : "Sp"},
                                   {"k", e.k},
                                   {"path", e.path}});
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "cache dir: " << eng.cache_dir() << "\n";
                for (const auto& e : info)
                    std::cout << "  " << (e.group == 'O' ? "O " : "Sp") << " k=" << e.k
                              << "  " << e.path << "\n";
                if (info.empty()) std::cout << "  (empty)\n";
            }
        } else if (*cmd_cache_clear) {
            eng.clear_cache();
            if (!as_json) std::cout << "cache cleared\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
