#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmftk {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rat& x) { return boost::multiprecision::denominator(x); }

// floor(a/b) with b > 0, exact for negative a as well
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline BigInt rat_floor(const Rat& x) { return floor_div(num(x), den(x)); }

// fractional part in [0,1)
inline Rat mod1(const Rat& x) { return x - Rat(rat_floor(x)); }

inline Rat pow2(long e) {
    if (e >= 0) return Rat(BigInt(1) << e);
    return Rat(BigInt(1), BigInt(1) << (-e));
}

inline bool is_power_of_two(const BigInt& v) {
    if (v <= 0) return false;
    return boost::multiprecision::lsb(v) == boost::multiprecision::msb(v);
}

// x = k/2^n in lowest terms?
inline bool is_dyadic(const Rat& x) { return is_power_of_two(den(x)) || den(x) == 1; }

// quotient of two nonnegative big integers as a double, safe for huge operands
inline double to_double_ratio(BigInt n, BigInt d) {
    if (n == 0) return 0.0;
    if (d == 0) throw std::invalid_argument("to_double_ratio: zero denominator");
    bool neg = false;
    if (n < 0) { n = -n; neg = !neg; }
    if (d < 0) { d = -d; neg = !neg; }
    long bn = static_cast<long>(boost::multiprecision::msb(n));
    long bd = static_cast<long>(boost::multiprecision::msb(d));
    long shift = std::max(bn, bd) - 200;
    if (shift > 0) {
        n >>= shift;
        d >>= shift;
        if (d == 0) return neg ? -HUGE_VAL : HUGE_VAL;
    }
    double r = n.convert_to<double>() / d.convert_to<double>();
    return neg ? -r : r;
}

inline double to_double(const Rat& x) { return to_double_ratio(num(x), den(x)); }

// exact floor(log2(x)) for x > 0
inline long floor_log2(const Rat& x) {
    if (x <= 0) throw std::invalid_argument("floor_log2: needs x > 0");
    const BigInt n = num(x), d = den(x);
    long e = static_cast<long>(boost::multiprecision::msb(n)) -
             static_cast<long>(boost::multiprecision::msb(d));
    // 2^e <= x < 2^(e+2); adjust down if needed
    if (e >= 0) {
        if ((d << e) > n) --e;
    } else {
        if (d > (n << (-e))) --e;
    }
    return e;
}

// accurate log2 of a positive rational (handles huge numerators/denominators)
inline double log2_rat(const Rat& x) {
    long e = floor_log2(x);
    Rat m = (e >= 0) ? Rat(x / pow2(e)) : Rat(x * pow2(-e));  // in [1,2)
    return double(e) + std::log2(to_double(m));
}

// parse "a/b", "a", or a plain decimal like "0.25"
inline std::optional<Rat> parse_rat(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view v) {
        if (v.empty()) return false;
        size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
        return true;
    };
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        auto a = trim(s.substr(0, slash)), b = trim(s.substr(slash + 1));
        if (!is_int(a) || !is_int(b)) return std::nullopt;
        BigInt nb(std::string(b));
        if (nb == 0) return std::nullopt;
        return Rat(BigInt(std::string(a)), nb);
    }
    size_t dot = s.find('.');
    if (dot != std::string_view::npos) {
        auto a = s.substr(0, dot), b = s.substr(dot + 1);
        if (b.empty() || !is_int(b) || (!a.empty() && !is_int(a))) return std::nullopt;
        BigInt ip = a.empty() || a == "-" || a == "+" ? BigInt(0) : BigInt(std::string(a));
        BigInt fp(std::string(b));
        BigInt scale = 1;
        for (size_t i = 0; i < b.size(); ++i) scale *= 10;
        bool neg = !a.empty() && a[0] == '-';
        Rat r = Rat(ip) + (neg ? -Rat(fp, scale) : Rat(fp, scale));
        return r;
    }
    if (!is_int(s)) return std::nullopt;
    return Rat(BigInt(std::string(s)));
}

inline std::string rat_str(const Rat& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

}  // namespace qmftk
