#pragma once

#include <map>
#include <optional>
#include <vector>

#include "staircase/geometry.hpp"
#include "staircase/linalg.hpp"
#include "staircase/orders.hpp"
#include "staircase/rational.hpp"

namespace stair {

using IVec = std::vector<Int>;

// Finite set of distinct integer points in Z^n.
struct PointSet {
    int n = 0;
    std::vector<IVec> pts;

    static PointSet of(int n, std::vector<IVec> pts);
    std::size_t size() const { return pts.size(); }
};

// Finitely supported function Z^n -> Q; no zero values are stored.
struct FiniteFn {
    int n = 0;
    std::map<IVec, Rat> terms;

    static FiniteFn of(int n, std::vector<std::pair<IVec, Rat>> terms);
    bool zero() const { return terms.empty(); }
    void set(const IVec& p, const Rat& c);
    Rat coeff(const IVec& p) const;
    PointSet support() const;
};

FiniteFn delta(const IVec& p); // indicator of a single point

// Staircase: exponents of the monomials that remain independent as functions
// on the generating point set; always a lower set of size |A|.
struct Staircase {
    MonomialOrder order;
    std::vector<Exponent> elems; // ascending in the order

    bool contains(const Exponent& e) const;
    long max_degree() const;
    long min_missing_degree() const;
};

// <f, X^e> = sum_a f(a) * a^e, with 0^0 = 1 and integer powers throughout.
Rat pairing(const FiniteFn& f, const Exponent& e);

// Smallest exponent (in the order) whose pairing with f is nonzero. The scan
// is capped by the coordinate extents of supp(f), which always suffices.
Exponent sm(const FiniteFn& f, const MonomialOrder& order);

// |sm(f)| under degree-lex: the vanishing order of the associated Laurent
// polynomial at the all-ones point.
long vanishing_order(const FiniteFn& f);

Staircase compute_E(const PointSet& a, const MonomialOrder& order);

// Fiber recursion for pure lex orders; agrees with compute_E on lex.
Staircase compute_E_lex(const PointSet& a);
Staircase compute_E_lex(const PointSet& a, const MonomialOrder& order);

// smallest degree of a polynomial vanishing on A (degree-lex staircase)
long r_value(const PointSet& a);
long r_value(const Staircase& e);
// largest degree inside the staircase = max vanishing order over F_A
long s_value(const PointSet& a);
long s_value(const Staircase& e);

// f supported in A with sm(f) = e, scaled so pairing(f, e) = 1.
FiniteFn witness(const PointSet& a, const MonomialOrder& order, const Exponent& e);

FiniteFn convolve(const FiniteFn& f, const FiniteFn& g);

LatticePolygon newton_polytope(const FiniteFn& f); // n = 2

} // namespace stair
