#pragma once

#include <optional>
#include <vector>

#include "staircase/atlas.hpp"
#include "staircase/engine.hpp"
#include "staircase/geometry.hpp"

namespace stair {

// Lattice data of one dilate d*P.
struct DilateScan {
    Rat d;
    std::vector<IPt> points;
    std::optional<Staircase> stairs; // absent iff no lattice points
};

struct DilateReport {
    Rat d;
    long point_count = 0;
    std::optional<long> r, s;
    std::optional<Rat> v_est, w_est; // (r-1)/d and s/d
};

struct SPBracket {
    Rat d;
    long point_count = 0;
    RatPolygon a_poly;  // inner hull, scaled staircase
    Rat vol_target;     // vol(P)
    std::optional<Rat> v_lo, w_lo;
    std::optional<Rat> v_hi, w_hi; // absent when the outer region is unbounded
};

struct TriangleSP {
    RatPolygon poly;
    bool is_quadrilateral = false;
};

DilateScan dilate_scan(const RatPolygon& p, const Rat& d);
DilateReport dilate_report(const RatPolygon& p, const Rat& d);
DilateReport dilate_report(const DilateScan& scan);

// hull(d^{-1} * staircase points); inner approximation of the limit body
RatPolygon a_lower(const RatPolygon& p, const Rat& d);
RatPolygon a_lower(const DilateScan& scan);

// outer membership test: does adding e keep the hull volume within vol(P)?
bool b_contains(const RatPolygon& p, const Rat& d, const QPt& e);

SPBracket bracket(const RatPolygon& p, const Rat& d);
SPBracket bracket(const RatPolygon& p, const DilateScan& scan);

struct witness_insufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact limit body of a triangle from an irreducible witness f:
// hull{(0,0),(v,0), sm(f)/l, (0,v)} with w = |sm(f)|/l and v = 2vol(P)/w.
// Requires w^2 >= 2vol(P); throws witness_insufficient otherwise.
TriangleSP triangle_sp_exact(const RatPolygon& p, const FiniteFn& f, const Verdict& cert);

// Exact limit body for the pure lex order in the plane, via fiber lengths.
RatPolygon lex_sp_2d(const RatPolygon& p);

// Rational triangle whose dilates count weighted-degree monomials of
// P^{a,b,c}; variant selects between two valid lattice identifications.
RatPolygon weighted_triangle(long a, long b, long c, int variant = 0);

struct SeshadriBracket {
    std::optional<Rat> lo, hi;
    std::vector<SPBracket> per_d;
};

SeshadriBracket seshadri_bracket(long a, long b, long c, const std::vector<Rat>& schedule,
                                 int variant = 0);

} // namespace stair
