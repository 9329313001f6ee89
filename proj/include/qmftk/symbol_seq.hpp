#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmftk/rational.hpp"

namespace qmftk {

// A finite word over the alphabet {0,...,J}, leftmost symbol first.
using Word = std::vector<int>;

Word parse_word(std::string_view digits);
std::string word_str(const Word& w);
bool contains_subword(const Word& text, const Word& pat);

// An eventually periodic point of X = {0,...,J}^{Z_-}, written `(q)*s`:
// the block q repeats leftward to -infinity, the suffix s holds the
// rightmost symbols with its last symbol at index 0.
//
// Canonical form: q is primitive and no suffix symbol can be absorbed into
// the periodic part (shortest possible suffix). Two SymbolSeq represent the
// same point iff their canonical forms are componentwise equal.
class SymbolSeq {
public:
    SymbolSeq(Word period, Word suffix, int alphabet_bound);

    static SymbolSeq parse(std::string_view text, int alphabet_bound);

    int J() const { return j_; }
    const Word& period() const { return period_; }
    const Word& suffix() const { return suffix_; }

    // symbol at position i <= 0
    int at(long i) const;

    // drops x_0
    SymbolSeq shifted() const;

    // x_0 += j (mod J+1); the star map for j=1..J
    SymbolSeq star(int j = 1) const;

    // the point (this, sym): sym becomes the new x_0
    SymbolSeq appended(int sym) const;

    // last n symbols, leftmost first
    Word last_word(int n) const;

    std::string str() const;

    bool operator==(const SymbolSeq& o) const {
        return j_ == o.j_ && period_ == o.period_ && suffix_ == o.suffix_;
    }
    bool operator!=(const SymbolSeq& o) const { return !(*this == o); }

private:
    void canonicalize();

    Word period_;
    Word suffix_;
    int j_;
};

// the metric 2^{-min{|i| : x_i != x_i'}}, 0 for equal points; exact dyadic
Rat rho(const SymbolSeq& a, const SymbolSeq& b);

// binary-expansion value sum_{i<=0} x_i 2^{i-1} in [0,1]; J must be 1
Rat tau(const SymbolSeq& s);

// all binary representations of x in [0,1]: two for binary rationals in
// (0,1), one otherwise
std::vector<SymbolSeq> binary_reps(const Rat& x);

}  // namespace qmftk
