#include "wordint/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wordint/errors.hpp"

namespace wordint {

namespace {

// Recursive-descent parser producing the literal letter sequence.
class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    std::vector<int> parse() {
        auto out = sequence();
        skip_sep();
        if (pos_ != s_.size()) fail("unexpected character");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("word parse error at position " + std::to_string(pos_) + ": " +
                         msg);
    }

    void skip_sep() {
        while (pos_ < s_.size() &&
               (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
            ++pos_;
    }

    bool at_atom_start() {
        skip_sep();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
    }

    std::vector<int> sequence() {
        std::vector<int> out;
        while (at_atom_start()) {
            auto part = atom_with_power();
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    std::vector<int> atom_with_power() {
        std::vector<int> base = atom();
        skip_sep();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long k = integer();
            std::vector<int> out;
            std::vector<int> rep = base;
            if (k < 0) {
                std::reverse(rep.begin(), rep.end());
                for (auto& v : rep) v = -v;
                k = -k;
            }
            for (long i = 0; i < k; ++i) out.insert(out.end(), rep.begin(), rep.end());
            return out;
        }
        return base;
    }

    std::vector<int> atom() {
        skip_sep();
        if (pos_ >= s_.size()) fail("expected a letter, '(' or '['");
        char c = s_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            ++pos_;
            return {c - 'a' + 1};
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            ++pos_;
            return {-(c - 'A' + 1)};
        }
        if (c == '(') {
            ++pos_;
            auto out = sequence();
            skip_sep();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("unbalanced '('");
            ++pos_;
            return out;
        }
        if (c == '[') {
            ++pos_;
            auto u = sequence();
            skip_sep();
            if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ',' in commutator");
            ++pos_;
            auto v = sequence();
            skip_sep();
            if (pos_ >= s_.size() || s_[pos_] != ']') fail("unbalanced '['");
            ++pos_;
            std::vector<int> out = u;
            out.insert(out.end(), v.begin(), v.end());
            for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(-*it);
            for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
            return out;
        }
        fail("expected a letter, '(' or '['");
    }

    long integer() {
        skip_sep();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits) fail("expected an integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

// Letter order a < A < b < B < ... : rank 2*(g-1) for +g, 2*(g-1)+1 for -g.
int letter_rank(int v) {
    int g = v > 0 ? v : -v;
    return 2 * (g - 1) + (v < 0 ? 1 : 0);
}

bool rotation_less(const std::vector<int>& w, size_t i, size_t j) {
    const size_t n = w.size();
    for (size_t t = 0; t < n; ++t) {
        int a = letter_rank(w[(i + t) % n]);
        int b = letter_rank(w[(j + t) % n]);
        if (a != b) return a < b;
    }
    return false;
}

// E[(mu + X)^c] for X ~ N(0, var): sum over the number of X factors paired up.
mpz_class normal_moment(long mu, long var, int c) {
    mpz_class total = 0;
    for (int t = 0; 2 * t <= c; ++t) {
        // choose(c, 2t) * (2t-1)!! * var^t * mu^(c-2t)
        mpz_class term;
        mpz_bin_uiui(term.get_mpz_t(), c, 2 * t);
        for (int j = 2 * t - 1; j > 0; j -= 2) term *= j;
        for (int j = 0; j < t; ++j) term *= var;
        if (mu == 0 && c - 2 * t > 0) term = 0;
        total += term;
    }
    return total;
}

}  // namespace

bool Word::trivial_after_reduction() const { return free_reduce(*this).letters.empty(); }

std::string Word::str() const {
    std::ostringstream out;
    for (int v : letters) {
        int g = v > 0 ? v : -v;
        out << static_cast<char>((v > 0 ? 'a' : 'A') + g - 1);
    }
    return letters.empty() ? "1" : out.str();
}

Word parse_word(const std::string& text) {
    Parser p(text);
    Word w{p.parse()};
    for (int v : w.letters) {
        if (v == 0 || v > 26 || v < -26) throw ParseError("letter out of range");
    }
    return w;
}

Word invert(const Word& w) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

Word free_reduce(const Word& w) {
    std::vector<int> stack;
    for (int v : w.letters) {
        if (!stack.empty() && stack.back() == -v)
            stack.pop_back();
        else
            stack.push_back(v);
    }
    return Word{std::move(stack)};
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word{std::vector<int>(r.letters.begin() + lo, r.letters.begin() + hi)};
}

std::pair<Word, int> primitive_root(const Word& w) {
    Word r = cyclic_reduce(w);
    const size_t n = r.letters.size();
    if (n == 0) return {Word{}, 0};
    for (size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i)
            periodic = (r.letters[i] == r.letters[i - p]);
        if (periodic) {
            Word root{std::vector<int>(r.letters.begin(), r.letters.begin() + p)};
            return {root, static_cast<int>(n / p)};
        }
    }
    return {r, 1};
}

bool is_square(const Word& w) {
    auto [root, d] = primitive_root(w);
    (void)root;
    return d % 2 == 0 || d == 0;
}

Word conjugacy_class_representative(const Word& w) {
    Word r = cyclic_reduce(w);
    const size_t n = r.letters.size();
    if (n <= 1) return r;
    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (rotation_less(r.letters, i, best)) best = i;
    std::vector<int> rot;
    rot.reserve(n);
    for (size_t t = 0; t < n; ++t) rot.push_back(r.letters[(best + t) % n]);
    return Word{std::move(rot)};
}

std::map<int, int> unsigned_exponents(const std::vector<Word>& words) {
    std::map<int, int> counts;
    for (const auto& w : words)
        for (int v : w.letters) counts[v > 0 ? v : -v]++;
    return counts;
}

namespace {

mpz_class limit_counting_rec(const std::vector<Word>& reps,
                             const std::vector<Word>& inv_reps,
                             const std::vector<int>& weights,
                             const std::vector<bool>& squares, std::vector<bool>& used,
                             size_t from) {
    size_t i = from;
    while (i < used.size() && used[i]) ++i;
    if (i == used.size()) return 1;
    used[i] = true;
    mpz_class total = 0;
    if (squares[i]) total += limit_counting_rec(reps, inv_reps, weights, squares, used, i + 1);
    for (size_t j = i + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        if (reps[j] == reps[i] || reps[j] == inv_reps[i]) {
            used[j] = true;
            total += weights[i] *
                     limit_counting_rec(reps, inv_reps, weights, squares, used, i + 1);
            used[j] = false;
        }
    }
    used[i] = false;
    return total;
}

}  // namespace

mpz_class limit_counting(const std::vector<Word>& words) {
    std::vector<Word> reps, inv_reps;
    std::vector<int> weights;
    std::vector<bool> squares;
    for (const auto& w : words) {
        reps.push_back(conjugacy_class_representative(w));
        inv_reps.push_back(conjugacy_class_representative(invert(w)));
        weights.push_back(primitive_root(w).second);
        squares.push_back(is_square(w));
    }
    std::vector<bool> used(words.size(), false);
    return limit_counting_rec(reps, inv_reps, weights, squares, used, 0);
}

mpz_class ds_predicted_moment(int d, const std::vector<int>& powers) {
    // tr((u^d)^j) = tr(u^{d|j|}); group the powers by m = d*|j| and use independence
    // of the limiting normals tr(u^m) ~ N([m even], m + [m even]).
    std::map<long, int> counts;
    for (int j : powers) {
        long m = static_cast<long>(d) * (j > 0 ? j : -j);
        if (m == 0) throw InternalError("ds_predicted_moment: zero power");
        counts[m]++;
    }
    mpz_class total = 1;
    for (const auto& [m, c] : counts) {
        long mu = (m % 2 == 0) ? 1 : 0;
        total *= normal_moment(mu, m, c);
    }
    return total;
}

}  // namespace wordint
