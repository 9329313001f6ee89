#include "qmftk/symbol_seq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qmftk {

Word parse_word(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word digit out of range: " + std::string(digits));
        w.push_back(c - '0');
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int v : w) s.push_back(static_cast<char>('0' + v));
    return s;
}

bool contains_subword(const Word& text, const Word& pat) {
    if (pat.empty() || pat.size() > text.size()) return false;
    return std::search(text.begin(), text.end(), pat.begin(), pat.end()) != text.end();
}

SymbolSeq::SymbolSeq(Word period, Word suffix, int alphabet_bound)
    : period_(std::move(period)), suffix_(std::move(suffix)), j_(alphabet_bound) {
    if (j_ < 1) throw std::invalid_argument("alphabet bound must be >= 1");
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    for (int v : period_)
        if (v < 0 || v > j_) throw std::invalid_argument("period symbol out of range");
    for (int v : suffix_)
        if (v < 0 || v > j_) throw std::invalid_argument("suffix symbol out of range");
    canonicalize();
}

void SymbolSeq::canonicalize() {
    // primitive period: shortest u with period = u^k
    const size_t m = period_.size();
    for (size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool rep = true;
        for (size_t i = d; i < m && rep; ++i) rep = period_[i] == period_[i % d];
        if (rep) {
            period_.resize(d);
            break;
        }
    }
    // absorb suffix symbols that continue the periodic part: if the leftmost
    // suffix symbol equals the period's first symbol, it can be moved into
    // the periodic zone by rotating the period left by one.
    while (!suffix_.empty() && suffix_.front() == period_.front()) {
        suffix_.erase(suffix_.begin());
        std::rotate(period_.begin(), period_.begin() + 1, period_.end());
    }
}

SymbolSeq SymbolSeq::parse(std::string_view text, int alphabet_bound) {
    size_t open = text.find('(');
    size_t close = text.find(")*");
    if (open != 0 || close == std::string_view::npos)
        throw std::invalid_argument("expected `(q)*s` form: " + std::string(text));
    Word q = parse_word(text.substr(1, close - 1));
    Word s = parse_word(text.substr(close + 2));
    return SymbolSeq(std::move(q), std::move(s), alphabet_bound);
}

int SymbolSeq::at(long i) const {
    if (i > 0) throw std::invalid_argument("positions are <= 0");
    const long r = static_cast<long>(suffix_.size());
    if (-i < r) return suffix_[static_cast<size_t>(r - 1 + i)];
    const long m = static_cast<long>(period_.size());
    const long k = (-i) - r;  // offset into the periodic zone, 0 at position -r
    return period_[static_cast<size_t>(m - 1 - (k % m))];
}

SymbolSeq SymbolSeq::shifted() const {
    if (!suffix_.empty()) {
        Word s = suffix_;
        s.pop_back();
        return SymbolSeq(period_, std::move(s), j_);
    }
    Word q = period_;
    std::rotate(q.begin(), q.end() - 1, q.end());  // rotate right
    return SymbolSeq(std::move(q), {}, j_);
}

SymbolSeq SymbolSeq::star(int j) const {
    if (j < 0 || j > j_) throw std::invalid_argument("star index out of range");
    Word s = suffix_.empty() ? period_ : suffix_;
    s.back() = (s.back() + j) % (j_ + 1);
    return SymbolSeq(period_, std::move(s), j_);
}

SymbolSeq SymbolSeq::appended(int sym) const {
    if (sym < 0 || sym > j_) throw std::invalid_argument("appended symbol out of range");
    Word s = suffix_;
    s.push_back(sym);
    return SymbolSeq(period_, std::move(s), j_);
}

Word SymbolSeq::last_word(int n) const {
    Word w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = at(i - n + 1);
    return w;
}

std::string SymbolSeq::str() const {
    return "(" + word_str(period_) + ")*" + word_str(suffix_);
}

Rat rho(const SymbolSeq& a, const SymbolSeq& b) {
    if (a.J() != b.J()) throw std::invalid_argument("rho: alphabet bounds differ");
    if (a == b) return Rat(0);
    const long ra = static_cast<long>(a.suffix().size());
    const long rb = static_cast<long>(b.suffix().size());
    const long ma = static_cast<long>(a.period().size());
    const long mb = static_cast<long>(b.period().size());
    const long bound = std::max(ra, rb) + 2 * std::lcm(ma, mb) + 2;
    for (long l = 0; l <= bound; ++l) {
        if (a.at(-l) != b.at(-l)) return pow2(-l);
    }
    throw std::logic_error("rho: canonical forms differ but sequences agree");
}

Rat tau(const SymbolSeq& s) {
    if (s.J() != 1) throw std::invalid_argument("tau is defined for the binary alphabet");
    const Word& q = s.period();
    const Word& sf = s.suffix();
    const long m = static_cast<long>(q.size());
    const long r = static_cast<long>(sf.size());
    BigInt P = 0, S = 0;
    for (long i = 0; i < m; ++i)
        if (q[static_cast<size_t>(i)]) P += BigInt(1) << i;
    for (long i = 0; i < r; ++i)
        if (sf[static_cast<size_t>(i)]) S += BigInt(1) << i;
    Rat periodic(P, (BigInt(1) << m) - 1);
    return (Rat(S) + periodic) / pow2(r);
}

std::vector<SymbolSeq> binary_reps(const Rat& x) {
    if (x < 0 || x > 1) throw std::invalid_argument("binary_reps: x must be in [0,1]");
    if (x == 0) return {SymbolSeq({0}, {}, 1)};
    if (x == 1) return {SymbolSeq({1}, {}, 1)};
    if (is_dyadic(x)) {
        // digits d_1..d_n of x, d_n = 1
        std::vector<int> digits;
        Rat r = x;
        while (r != 0) {
            r *= 2;
            if (r >= 1) {
                digits.push_back(1);
                r -= 1;
            } else {
                digits.push_back(0);
            }
        }
        // zeros-tail rep: digit stream d_1..d_n 0 0 0...
        Word zeros_suffix(digits.rbegin(), digits.rend());
        // ones-tail rep: digit stream d_1..d_{n-1} 0 1 1 1...
        Word ones_suffix(digits.begin(), digits.end());
        ones_suffix.back() = 0;
        std::reverse(ones_suffix.begin(), ones_suffix.end());
        return {SymbolSeq({0}, zeros_suffix, 1), SymbolSeq({1}, ones_suffix, 1)};
    }
    // long division, cycle detection on remainders
    const BigInt q = den(x);
    BigInt r = num(x);
    std::vector<int> digits;
    std::map<BigInt, size_t> seen;
    size_t cycle_start = 0;
    while (true) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen[r] = digits.size();
        r *= 2;
        if (r >= q) {
            digits.push_back(1);
            r -= q;
        } else {
            digits.push_back(0);
        }
    }
    std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(cycle_start));
    std::vector<int> cyc(digits.begin() + static_cast<long>(cycle_start), digits.end());
    Word period(cyc.rbegin(), cyc.rend());
    Word suffix(pre.rbegin(), pre.rend());
    return {SymbolSeq(std::move(period), std::move(suffix), 1)};
}

}  // namespace qmftk
