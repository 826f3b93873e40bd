#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace stair {

// Exponent vector in N^n.
struct Exponent {
    std::vector<int> c;

    Exponent() = default;
    explicit Exponent(std::vector<int> v) : c(std::move(v)) {}
    Exponent(std::initializer_list<int> v) : c(v) {}

    std::size_t size() const { return c.size(); }
    int operator[](std::size_t i) const { return c[i]; }
    int& operator[](std::size_t i) { return c[i]; }

    long degree() const {
        long d = 0;
        for (int x : c)
            d += x;
        return d;
    }

    bool operator==(const Exponent& o) const = default;
    // container ordering only; monomial comparisons go through MonomialOrder
    auto operator<=>(const Exponent& o) const { return c <=> o.c; }
};

inline Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

// coordinatewise a <= b
inline bool dominated_by(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

enum class OrderKind { deglex, lex };

// Monomial well-order: degree-lexicographic or pure lexicographic, with an
// explicit variable priority (prio[0] is the smallest variable, 0-based).
struct MonomialOrder {
    OrderKind kind = OrderKind::deglex;
    std::vector<int> prio;

    static MonomialOrder deglex(int n);
    static MonomialOrder lex(int n);
    static MonomialOrder parse(const std::string& spec); // e.g. "deglex:x1<x2"

    int arity() const { return static_cast<int>(prio.size()); }
    std::string str() const;

    // negative / 0 / positive, strict total order compatible with addition
    int cmp(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return cmp(a, b) < 0; }
};

// All exponents e with e <= cap coordinatewise, sorted ascending by the order.
std::vector<Exponent> ascending_exponents(const MonomialOrder& order, const Exponent& cap);

// Number of monomials strictly below X^e under deglex in two variables:
// C(|e|+1, 2) + (exponent of the larger variable).
long q_count(const MonomialOrder& order, const Exponent& e);

bool is_lower_set(const std::set<Exponent>& s);
bool is_lower_set(const std::vector<Exponent>& s);

} // namespace stair
