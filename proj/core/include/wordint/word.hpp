#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wordint {

// A word in the free group F_26. Letters are nonzero signed generator indices:
// +g for the g-th generator (a..z => 1..26), -g for its inverse. The letter
// vector is kept literally as written; use free_reduce / cyclic_reduce to
// normalize.
struct Word {
    std::vector<int> letters;

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
    size_t length() const { return letters.size(); }
    bool trivial_after_reduction() const;
    std::string str() const;
};

// Grammar: generators a..z, inverses A..Z, ^k integer powers (k may be negative),
// [u,v] = u v u^-1 v^-1, parentheses for grouping, '*' and whitespace as optional
// separators. Throws ParseError on malformed input.
Word parse_word(const std::string& text);

Word invert(const Word& w);
Word free_reduce(const Word& w);
// Freely reduce, then strip conjugating prefixes (u v u^-1 -> v).
Word cyclic_reduce(const Word& w);
// Primitive root of the cyclic reduction: returns (u, d) with cyclic_reduce(w) = u^d
// and u primitive. The exponent d is conjugation invariant. d = 0 for trivial words.
std::pair<Word, int> primitive_root(const Word& w);
// True iff w is conjugate to a square v^2 (equivalently, its root exponent is even).
bool is_square(const Word& w);
// Canonical conjugacy class representative: the least cyclic rotation of the cyclic
// reduction under the letter order a < A < b < B < ... .
Word conjugacy_class_representative(const Word& w);
// Total occurrence count per generator, counting both signs (generator -> count).
std::map<int, int> unsigned_exponents(const std::vector<Word>& words);

// The combinatorial limit value of the O(n) integral as n -> infinity: sum over
// partitions of the tuple into singletons (admissible iff the word is a square,
// weight 1) and pairs (admissible iff the words are conjugate or inverse-conjugate,
// weight = common root exponent d).
mpz_class limit_counting(const std::vector<Word>& words);

// Predicted limiting joint moment E[prod_i tr(w^{j_i})] for w = u^d with u primitive,
// from the limiting independent normal family tr(u^m) -> N([m even], m) via the
// Isserlis / moment expansion.
mpz_class ds_predicted_moment(int d, const std::vector<int>& powers);

}  // namespace wordint
