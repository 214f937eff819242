// Exact arithmetic kernel: arbitrary-precision rationals, residues,
// modular inverses. Everything downstream is built on these primitives;
// no floating point anywhere in the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ca1 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a cross-module identity that must hold exactly fails.
// Distinct from std::invalid_argument (caller precondition violations).
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat make_rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    return Rat(Int(num), Int(den));
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Canonical form: "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += rat_den(q).str();
    }
    return s;
}

inline Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + std::string(text) + "'");
    }
}

// j - floor(j/r)*r with round-down division, so negative j land in [0, r).
inline long long smallest_residue(long long j, long long r) {
    if (r < 1) throw std::invalid_argument("smallest_residue: modulus must be positive");
    long long m = j % r;
    return m < 0 ? m + r : m;
}

// e in [1, r) with a*e = 1 mod r, when gcd(a, r) = 1; r = 1 yields 0
// (the congruence is vacuous there).
inline std::optional<long long> mod_inverse(long long a, long long r) {
    if (r < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (r == 1) return 0;
    long long old_r = smallest_residue(a, r), cur_r = r;
    long long old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        long long q = old_r / cur_r;
        old_r -= q * cur_r;
        std::swap(old_r, cur_r);
        old_s -= q * cur_s;
        std::swap(old_s, cur_s);
    }
    if (old_r != 1) return std::nullopt;
    return smallest_residue(old_s, r);
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm_ll: zero argument");
    return a / std::gcd(a, b) * b;
}

}  // namespace ca1
