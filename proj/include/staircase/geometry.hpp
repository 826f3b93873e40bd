#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "staircase/rational.hpp"

namespace stair {

template <typename T>
struct Pt2 {
    T x{};
    T y{};
    bool operator==(const Pt2&) const = default;
    auto operator<=>(const Pt2&) const = default; // lex by (x, y)
};

using IPt = Pt2<Int>;
using QPt = Pt2<Rat>;

template <typename T>
Pt2<T> operator+(const Pt2<T>& a, const Pt2<T>& b) { return {a.x + b.x, a.y + b.y}; }
template <typename T>
Pt2<T> operator-(const Pt2<T>& a, const Pt2<T>& b) { return {a.x - b.x, a.y - b.y}; }

template <typename T>
T cross(const Pt2<T>& a, const Pt2<T>& b) { return a.x * b.y - a.y * b.x; }
template <typename T>
T cross(const Pt2<T>& o, const Pt2<T>& a, const Pt2<T>& b) { return cross(a - o, b - o); }

inline QPt to_rat(const IPt& p) { return {Rat(p.x), Rat(p.y)}; }

// Convex polygon with exact vertices: only extreme points are stored,
// counterclockwise, starting from the lex-min vertex. dim 0 is a point and
// dim 1 a segment with exactly its two endpoints.
template <typename T>
struct Polygon {
    std::vector<Pt2<T>> v;
    int dim = 0;
    bool operator==(const Polygon&) const = default;
};

using LatticePolygon = Polygon<Int>;
using RatPolygon = Polygon<Rat>;

LatticePolygon convex_hull(std::vector<IPt> pts);
RatPolygon convex_hull_q(std::vector<QPt> pts);

RatPolygon to_rat(const LatticePolygon& p);
RatPolygon scale(const RatPolygon& p, const Rat& d);
RatPolygon translate(const RatPolygon& p, const QPt& t);

Int double_area(const LatticePolygon& p);
Rat double_area(const RatPolygon& p);

// Sum over directed boundary edges of the edge vector's coordinate gcd;
// a segment counts both orientations, a point counts 0.
Int boundary_count(const LatticePolygon& p);

// Lattice points of the polygon, sorted by (y, x).
std::vector<IPt> lattice_points(const LatticePolygon& p);
std::vector<IPt> lattice_points(const RatPolygon& p);
std::vector<IPt> lattice_points_dilate(const RatPolygon& p, const Rat& d);

// true also for boundary points
bool contains_point(const RatPolygon& p, const QPt& q);

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);
RatPolygon minkowski_sum(const RatPolygon& a, const RatPolygon& b);

// 2*vol(P,Q), from vol(P+Q) = vol(P) + vol(Q) + 2*vol(P,Q). Integral for
// lattice polygons.
Int mixed_volume_2x(const LatticePolygon& a, const LatticePolygon& b);
Rat mixed_volume_2x(const RatPolygon& a, const RatPolygon& b);

// All unordered pairs (Q1, Q2) of lattice polygons with >= 2 lattice points
// each and Q1 + Q2 = P up to translation. Empty result = indecomposable.
std::vector<std::pair<LatticePolygon, LatticePolygon>>
minkowski_decompositions(const LatticePolygon& p);

// Canonical representative of the orbit of P under x -> Ux + t with U an
// integer matrix of determinant +-1 and t integral. Two polygons are
// equivalent iff their canonical forms are identical.
LatticePolygon unimodular_canonical(const LatticePolygon& p);

// One canonical representative per equivalence class of dim >= 1 with
// double area <= max_double_area. Segments of lattice length 1..max(1, bound)
// are included as the dim-1 classes.
std::vector<LatticePolygon> enumerate_polygons(long max_double_area);

// Smallest l >= 0 with A contained in a translate of l*P, for a triangle P.
Rat l_ratio(const RatPolygon& triangle, const std::vector<QPt>& pts);
Rat l_ratio(const RatPolygon& triangle, const RatPolygon& a);

} // namespace stair
