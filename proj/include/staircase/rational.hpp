#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace stair {

using Int = mpz_class;
using Rat = mpq_class; // always stored canonical: gcd(num, den) = 1, den >= 1

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num/den" (canonical) — the on-disk form used by JSON and CSV outputs.
inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Integers print bare, everything else as num/den.
inline std::string rat_display(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return rat_str(q);
}

// Accepts "num/den" or a bare integer string.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

} // namespace stair
