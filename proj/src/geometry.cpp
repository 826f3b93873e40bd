#include "staircase/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stair {

namespace {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

template <typename T>
Polygon<T> hull_impl(std::vector<Pt2<T>> pts) {
    if (pts.empty())
        throw std::invalid_argument("convex_hull: empty input");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polygon<T> poly;
    if (pts.size() == 1) {
        poly.v = {pts[0]};
        poly.dim = 0;
        return poly;
    }

    std::vector<Pt2<T>> lo, hi;
    for (const auto& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0)
            hi.pop_back();
        hi.push_back(*it);
    }
    if (lo.size() == 2 && hi.size() == 2) {
        poly.v = {pts.front(), pts.back()};
        poly.dim = 1;
        return poly;
    }
    poly.v = lo;
    poly.v.insert(poly.v.end(), hi.begin() + 1, hi.end() - 1);
    poly.dim = 2;
    return poly;
}

// directed edge cycle; a segment is traversed in both directions
template <typename T>
std::vector<Pt2<T>> edge_cycle(const Polygon<T>& p) {
    std::vector<Pt2<T>> es;
    if (p.dim == 1) {
        es.push_back(p.v[1] - p.v[0]);
        es.push_back(p.v[0] - p.v[1]);
    } else if (p.dim == 2) {
        for (std::size_t i = 0; i < p.v.size(); ++i)
            es.push_back(p.v[(i + 1) % p.v.size()] - p.v[i]);
    }
    return es;
}

template <typename T>
T dbl_area_impl(const Polygon<T>& p) {
    T s{};
    if (p.dim < 2)
        return s;
    for (std::size_t i = 0; i < p.v.size(); ++i)
        s += cross(p.v[i], p.v[(i + 1) % p.v.size()]);
    return s;
}

// angular comparison for edge vectors, angles measured in [0, 2pi)
template <typename T>
bool angle_less(const Pt2<T>& a, const Pt2<T>& b) {
    auto half = [](const Pt2<T>& u) { return (u.y > 0 || (u.y == 0 && u.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

template <typename T>
Pt2<T> bottom_vertex(const Polygon<T>& p) {
    Pt2<T> best = p.v[0];
    for (const auto& q : p.v)
        if (q.y < best.y || (q.y == best.y && q.x < best.x))
            best = q;
    return best;
}

template <typename T>
Polygon<T> minkowski_impl(const Polygon<T>& a, const Polygon<T>& b) {
    if (a.dim == 0) {
        Polygon<T> r = b;
        for (auto& q : r.v)
            q = q + a.v[0];
        return r;
    }
    if (b.dim == 0)
        return minkowski_impl(b, a);

    std::vector<Pt2<T>> es = edge_cycle(a);
    std::vector<Pt2<T>> eb = edge_cycle(b);
    es.insert(es.end(), eb.begin(), eb.end());
    std::stable_sort(es.begin(), es.end(),
                     [](const Pt2<T>& u, const Pt2<T>& v) { return angle_less(u, v); });

    Pt2<T> pos = bottom_vertex(a) + bottom_vertex(b);
    std::vector<Pt2<T>> walk = {pos};
    for (const auto& e : es) {
        pos = pos + e;
        walk.push_back(pos);
    }
    return hull_impl(std::move(walk));
}

std::vector<Int> flatten(const LatticePolygon& p) {
    std::vector<Int> f;
    for (const auto& q : p.v) {
        f.push_back(q.x);
        f.push_back(q.y);
    }
    return f;
}

LatticePolygon translate_to_origin(const LatticePolygon& p) {
    LatticePolygon r = p;
    IPt m = r.v[0]; // canonical lists start at the lex-min vertex
    for (const auto& q : r.v)
        if (q < m)
            m = q;
    for (auto& q : r.v)
        q = q - m;
    return convex_hull(r.v);
}

} // namespace

LatticePolygon convex_hull(std::vector<IPt> pts) { return hull_impl(std::move(pts)); }
RatPolygon convex_hull_q(std::vector<QPt> pts) { return hull_impl(std::move(pts)); }

RatPolygon to_rat(const LatticePolygon& p) {
    RatPolygon r;
    r.dim = p.dim;
    for (const auto& q : p.v)
        r.v.push_back(to_rat(q));
    return r;
}

RatPolygon scale(const RatPolygon& p, const Rat& d) {
    RatPolygon r = p;
    for (auto& q : r.v) {
        q.x *= d;
        q.y *= d;
    }
    if (d < 0)
        return hull_impl(std::move(r.v));
    return r;
}

RatPolygon translate(const RatPolygon& p, const QPt& t) {
    RatPolygon r = p;
    for (auto& q : r.v)
        q = q + t;
    return r;
}

Int double_area(const LatticePolygon& p) { return dbl_area_impl(p); }
Rat double_area(const RatPolygon& p) { return dbl_area_impl(p); }

Int boundary_count(const LatticePolygon& p) {
    Int b = 0;
    for (const auto& e : edge_cycle(p))
        b += gcd(e.x, e.y);
    return b;
}

std::vector<IPt> lattice_points(const RatPolygon& p) {
    std::vector<IPt> out;
    if (p.dim == 0) {
        const QPt& q = p.v[0];
        if (q.x.get_den() == 1 && q.y.get_den() == 1)
            out.push_back({q.x.get_num(), q.y.get_num()});
        return out;
    }
    if (p.dim == 1) {
        QPt a = p.v[0], b = p.v[1];
        if (a.x == b.x) {
            if (a.x.get_den() != 1)
                return out;
            Int x = a.x.get_num();
            Rat ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
            for (Int y = rat_ceil(ylo); y <= rat_floor(yhi); ++y)
                out.push_back({x, y});
        } else {
            if (a.x > b.x)
                std::swap(a, b);
            Rat slope = (b.y - a.y) / (b.x - a.x);
            for (Int x = rat_ceil(a.x); x <= rat_floor(b.x); ++x) {
                Rat y = a.y + (Rat(x) - a.x) * slope;
                if (y.get_den() == 1)
                    out.push_back({x, y.get_num()});
            }
            std::sort(out.begin(), out.end(),
                      [](const IPt& u, const IPt& v) { return std::tie(u.y, u.x) < std::tie(v.y, v.x); });
        }
        return out;
    }

    Rat ymin = p.v[0].y, ymax = p.v[0].y;
    for (const auto& q : p.v) {
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    for (Int y = rat_ceil(ymin); y <= rat_floor(ymax); ++y) {
        Rat ry(y);
        bool have = false;
        Rat xlo, xhi;
        auto add = [&](const Rat& x) {
            if (!have) {
                xlo = xhi = x;
                have = true;
            } else {
                xlo = std::min(xlo, x);
                xhi = std::max(xhi, x);
            }
        };
        for (std::size_t i = 0; i < p.v.size(); ++i) {
            const QPt& a = p.v[i];
            const QPt& b = p.v[(i + 1) % p.v.size()];
            if (a.y == b.y) {
                if (a.y == ry) {
                    add(a.x);
                    add(b.x);
                }
                continue;
            }
            Rat t0 = std::min(a.y, b.y), t1 = std::max(a.y, b.y);
            if (ry < t0 || ry > t1)
                continue;
            add(a.x + (ry - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        if (!have)
            continue;
        for (Int x = rat_ceil(xlo); x <= rat_floor(xhi); ++x)
            out.push_back({x, y});
    }
    return out;
}

std::vector<IPt> lattice_points(const LatticePolygon& p) { return lattice_points(to_rat(p)); }

std::vector<IPt> lattice_points_dilate(const RatPolygon& p, const Rat& d) {
    if (d <= 0)
        throw std::invalid_argument("lattice_points_dilate: dilation factor must be positive");
    return lattice_points(scale(p, d));
}

bool contains_point(const RatPolygon& p, const QPt& q) {
    if (p.dim == 0)
        return p.v[0] == q;
    if (p.dim == 1) {
        const QPt& a = p.v[0];
        const QPt& b = p.v[1];
        if (cross(a, b, q) != 0)
            return false;
        return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
    }
    for (std::size_t i = 0; i < p.v.size(); ++i)
        if (cross(p.v[i], p.v[(i + 1) % p.v.size()], q) < 0)
            return false;
    return true;
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
    return minkowski_impl(a, b);
}
RatPolygon minkowski_sum(const RatPolygon& a, const RatPolygon& b) {
    return minkowski_impl(a, b);
}

Int mixed_volume_2x(const LatticePolygon& a, const LatticePolygon& b) {
    Int num = double_area(minkowski_sum(a, b)) - double_area(a) - double_area(b);
    Int half;
    mpz_divexact_ui(half.get_mpz_t(), num.get_mpz_t(), 2);
    return half;
}

Rat mixed_volume_2x(const RatPolygon& a, const RatPolygon& b) {
    return (double_area(minkowski_sum(a, b)) - double_area(a) - double_area(b)) / 2;
}

std::vector<std::pair<LatticePolygon, LatticePolygon>>
minkowski_decompositions(const LatticePolygon& p) {
    if (p.dim < 1)
        throw std::invalid_argument("minkowski_decompositions: need dim >= 1");

    std::vector<IPt> prim;
    std::vector<long> mult;
    for (const auto& e : edge_cycle(p)) {
        Int g = gcd(e.x, e.y);
        prim.push_back({e.x / g, e.y / g});
        mult.push_back(g.get_si());
    }
    const std::size_t k = prim.size();

    // suffix bounds for closure pruning
    std::vector<Int> rest_x(k + 1, Int(0)), rest_y(k + 1, Int(0));
    for (std::size_t i = k; i-- > 0;) {
        rest_x[i] = rest_x[i + 1] + mult[i] * abs(prim[i].x);
        rest_y[i] = rest_y[i + 1] + mult[i] * abs(prim[i].y);
    }

    auto factor_polygon = [&](const std::vector<long>& u) {
        std::vector<IPt> walk = {{Int(0), Int(0)}};
        IPt pos{Int(0), Int(0)};
        for (std::size_t i = 0; i < k; ++i) {
            if (u[i] == 0)
                continue;
            pos = pos + IPt{prim[i].x * u[i], prim[i].y * u[i]};
            walk.push_back(pos);
        }
        return translate_to_origin(convex_hull(walk));
    };

    std::map<std::pair<std::vector<Int>, std::vector<Int>>,
             std::pair<LatticePolygon, LatticePolygon>>
        found;
    std::vector<long> u(k, 0);

    auto rec = [&](auto&& self, std::size_t i, Int sx, Int sy) -> void {
        if (abs(sx) > rest_x[i] || abs(sy) > rest_y[i])
            return;
        if (i == k) {
            if (sx != 0 || sy != 0)
                return;
            bool all0 = true, allm = true;
            for (std::size_t j = 0; j < k; ++j) {
                all0 = all0 && u[j] == 0;
                allm = allm && u[j] == mult[j];
            }
            if (all0 || allm)
                return;
            std::vector<long> w(k);
            for (std::size_t j = 0; j < k; ++j)
                w[j] = mult[j] - u[j];
            LatticePolygon q1 = factor_polygon(u);
            LatticePolygon q2 = factor_polygon(w);
            auto f1 = flatten(q1), f2 = flatten(q2);
            if (f2 < f1) {
                std::swap(f1, f2);
                std::swap(q1, q2);
            }
            found.emplace(std::make_pair(f1, f2), std::make_pair(q1, q2));
            return;
        }
        for (long c = 0; c <= mult[i]; ++c) {
            u[i] = c;
            self(self, i + 1, sx + c * prim[i].x, sy + c * prim[i].y);
        }
    };
    rec(rec, 0, Int(0), Int(0));

    std::vector<std::pair<LatticePolygon, LatticePolygon>> out;
    for (auto& [key, val] : found)
        out.push_back(val);
    return out;
}

namespace {

// anchor the directed edge (s, t) at the origin along +x; det switches the
// orientation so the interior always lands in the upper half plane
LatticePolygon anchor_edge(const LatticePolygon& p, const IPt& s, const IPt& t, int det) {
    IPt d = t - s;
    Int g = gcd(d.x, d.y);
    IPt prim{d.x / g, d.y / g};
    Int a, b, gg;
    mpz_gcdext(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), prim.x.get_mpz_t(),
               prim.y.get_mpz_t());
    // rows of U: (a, b) and +-(-py, px)
    Int r2x = det > 0 ? Int(-prim.y) : prim.y;
    Int r2y = det > 0 ? prim.x : Int(-prim.x);
    std::vector<IPt> img;
    for (const auto& q : p.v) {
        IPt w = q - s;
        img.push_back({a * w.x + b * w.y, r2x * w.x + r2y * w.y});
    }
    return convex_hull(img);
}

std::vector<Int> canonical_key_dim2(const LatticePolygon& anchored) {
    // anchored: CCW, with the edge (0,0) -> (g,0) on the axis, rest above
    const auto& v = anchored.v;
    const std::size_t k = v.size();
    std::size_t i0 = k;
    for (std::size_t i = 0; i < k; ++i)
        if (v[i].x == 0 && v[i].y == 0) {
            i0 = i;
            break;
        }
    // predecessor of the origin in ccw order carries the shear normalization
    const IPt& w = v[(i0 + k - 1) % k];
    Int m = -floor_div(w.x, w.y);
    std::vector<Int> flat;
    for (std::size_t i = 0; i < k; ++i) {
        const IPt& q = v[(i0 + i) % k];
        flat.push_back(q.x + m * q.y);
        flat.push_back(q.y);
    }
    return flat;
}

} // namespace

LatticePolygon unimodular_canonical(const LatticePolygon& p) {
    if (p.dim == 0)
        return {{{Int(0), Int(0)}}, 0};
    if (p.dim == 1) {
        IPt d = p.v[1] - p.v[0];
        Int g = gcd(d.x, d.y);
        return {{{Int(0), Int(0)}, {g, Int(0)}}, 1};
    }

    std::optional<std::vector<Int>> best;
    const std::size_t k = p.v.size();
    for (std::size_t i = 0; i < k; ++i) {
        const IPt& s = p.v[i];
        const IPt& t = p.v[(i + 1) % k];
        for (int det : {+1, -1}) {
            LatticePolygon q =
                det > 0 ? anchor_edge(p, s, t, +1) : anchor_edge(p, t, s, -1);
            std::vector<Int> key = canonical_key_dim2(q);
            if (!best || key < *best)
                best = std::move(key);
        }
    }
    LatticePolygon out;
    out.dim = 2;
    for (std::size_t i = 0; i + 1 < best->size(); i += 2)
        out.v.push_back({(*best)[i], (*best)[i + 1]});
    return out;
}

std::vector<LatticePolygon> enumerate_polygons(long max_double_area) {
    if (max_double_area < 0)
        throw std::invalid_argument("enumerate_polygons: negative bound");
    std::vector<LatticePolygon> out;

    long seg_max = std::max(1L, max_double_area);
    for (long len = 1; len <= seg_max; ++len)
        out.push_back({{{Int(0), Int(0)}, {Int(len), Int(0)}}, 1});

    const long D = max_double_area;
    std::set<std::vector<Int>> seen;
    std::vector<LatticePolygon> dim2;

    // grow ccw chains anchored on the bottom edge (0,0)->(g,0); every class
    // has such a representative with all vertices in [0,2D] x [0,D]
    std::vector<IPt> chain;
    auto emit = [&]() {
        LatticePolygon poly;
        poly.v = chain;
        poly.dim = 2;
        LatticePolygon canon = unimodular_canonical(poly);
        auto key = flatten(canon);
        if (seen.insert(key).second)
            dim2.push_back(canon);
    };

    auto rec = [&](auto&& self, const IPt& pos, const IPt& prev, long partial, long ymax) -> void {
        // close the chain back to the origin
        if (chain.size() >= 3) {
            IPt back{-pos.x, -pos.y};
            if (cross(prev, back) > 0 && pos.x >= 0 && pos.x < pos.y)
                emit();
        }
        if (partial >= D)
            return;
        for (long y = 1; y <= ymax; ++y) {
            for (long x = 0; x <= 2 * D; ++x) {
                IPt w{Int(x), Int(y)};
                IPt step = w - pos;
                if (step.x == 0 && step.y == 0)
                    continue;
                if (cross(prev, step) <= 0)
                    continue;
                Int fan = cross(pos, w);
                if (fan <= 0)
                    continue;
                long f = fan.get_si();
                if (partial + f > D)
                    continue;
                chain.push_back(w);
                self(self, w, step, partial + f, ymax);
                chain.pop_back();
            }
        }
    };

    for (long g = 1; g <= std::max(1L, D); ++g) {
        if (g > D)
            break;
        chain = {{Int(0), Int(0)}, {Int(g), Int(0)}};
        long ymax = D / g;
        rec(rec, {Int(g), Int(0)}, {Int(g), Int(0)}, 0, ymax);
    }

    std::sort(dim2.begin(), dim2.end(), [](const LatticePolygon& a, const LatticePolygon& b) {
        Int da = double_area(a), db = double_area(b);
        if (da != db)
            return da < db;
        if (a.v.size() != b.v.size())
            return a.v.size() < b.v.size();
        return flatten(a) < flatten(b);
    });
    out.insert(out.end(), dim2.begin(), dim2.end());
    return out;
}

Rat l_ratio(const RatPolygon& triangle, const std::vector<QPt>& pts) {
    if (triangle.dim != 2 || triangle.v.size() != 3)
        throw std::invalid_argument("l_ratio: reference polygon must be a nondegenerate triangle");
    if (pts.empty())
        throw std::invalid_argument("l_ratio: empty point set");
    const QPt& p0 = triangle.v[0];
    QPt c1 = triangle.v[1] - p0;
    QPt c2 = triangle.v[2] - p0;
    Rat det = cross(c1, c2);

    Rat max_sum, min_u, min_v;
    bool first = true;
    for (const auto& q : pts) {
        QPt w = q - p0;
        Rat u = cross(w, c2) / det;
        Rat v = cross(c1, w) / det;
        if (first) {
            max_sum = u + v;
            min_u = u;
            min_v = v;
            first = false;
        } else {
            max_sum = std::max(max_sum, u + v);
            min_u = std::min(min_u, u);
            min_v = std::min(min_v, v);
        }
    }
    return max_sum - min_u - min_v;
}

Rat l_ratio(const RatPolygon& triangle, const RatPolygon& a) {
    return l_ratio(triangle, a.v);
}

} // namespace stair
