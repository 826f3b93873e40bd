#include "staircase/spolytope.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace stair {

namespace {

// vol(hull(A u {e})) - vol(A), in double-area units, is a sum of hinge
// functions: one linear form per edge, positive exactly outside that edge.
struct LinForm {
    Rat cx, cy, c0;
    Rat eval(const QPt& e) const { return cx * e.x + cy * e.y + c0; }
};

std::vector<LinForm> added_area_forms(const RatPolygon& a) {
    std::vector<LinForm> fs;
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        const QPt& v = a.v[i];
        QPt e = a.v[(i + 1) % a.v.size()] - v;
        fs.push_back({e.y, -e.x, e.x * v.y - e.y * v.x});
    }
    return fs;
}

Rat added_dbl_area(const std::vector<LinForm>& fs, const QPt& e) {
    Rat acc(0);
    for (const auto& f : fs) {
        Rat val = f.eval(e);
        if (val > 0)
            acc += val;
    }
    return acc;
}

// Extreme-point candidates of {F <= budget} on the line p0 + t*dir, clipped
// to the nonnegative quadrant. Every returned point lies in the region.
std::vector<QPt> line_b_candidates(const std::vector<LinForm>& fs, const Rat& budget,
                                   const QPt& p0, const QPt& dir) {
    std::optional<Rat> tlo, thi;
    auto clip = [&](const Rat& pos, const Rat& d) -> bool {
        if (d == 0)
            return pos >= 0;
        Rat bound = -pos / d;
        if (d > 0)
            tlo = tlo ? std::max(*tlo, bound) : bound;
        else
            thi = thi ? std::min(*thi, bound) : bound;
        return true;
    };
    if (!clip(p0.x, dir.x) || !clip(p0.y, dir.y))
        return {};
    if (tlo && thi && *tlo > *thi)
        return {};

    std::vector<std::pair<Rat, Rat>> lf; // slope, offset of each form along the line
    for (const auto& f : fs)
        lf.push_back({f.cx * dir.x + f.cy * dir.y, f.eval(p0)});

    auto feval = [&](const Rat& t) {
        Rat acc(0);
        for (const auto& [s, c] : lf) {
            Rat val = s * t + c;
            if (val > 0)
                acc += val;
        }
        return acc;
    };
    auto in_range = [&](const Rat& t) {
        return (!tlo || t >= *tlo) && (!thi || t <= *thi);
    };

    std::set<Rat> knots;
    if (tlo)
        knots.insert(*tlo);
    if (thi)
        knots.insert(*thi);
    for (const auto& [s, c] : lf)
        if (s != 0) {
            Rat t = -c / s;
            if (in_range(t))
                knots.insert(t);
        }

    std::set<Rat> cand;
    if (knots.empty()) {
        // every form keeps a fixed sign: F is affine along the whole line
        if (feval(0) <= budget)
            throw std::logic_error("line_b_candidates: unbounded region");
        return {};
    }
    for (const Rat& k : knots)
        if (feval(k) <= budget)
            cand.insert(k);

    std::vector<Rat> ks(knots.begin(), knots.end());
    auto piece_root = [&](const Rat& probe, std::optional<Rat> a, std::optional<Rat> b) {
        Rat s_sum(0), c_sum(0);
        for (const auto& [s, c] : lf)
            if (s * probe + c > 0) {
                s_sum += s;
                c_sum += c;
            }
        if (s_sum == 0)
            return;
        Rat root = (budget - c_sum) / s_sum;
        if (a && root < *a)
            return;
        if (b && root > *b)
            return;
        if (in_range(root))
            cand.insert(root);
    };
    if (!tlo)
        piece_root(ks.front() - 1, std::nullopt, ks.front());
    for (std::size_t i = 0; i + 1 < ks.size(); ++i)
        piece_root((ks[i] + ks[i + 1]) / 2, ks[i], ks[i + 1]);
    if (!thi)
        piece_root(ks.back() + 1, ks.back(), std::nullopt);

    std::vector<QPt> out;
    for (const Rat& t : cand)
        out.push_back({p0.x + t * dir.x, p0.y + t * dir.y});
    return out;
}

} // namespace

DilateScan dilate_scan(const RatPolygon& p, const Rat& d) {
    if (p.dim != 2)
        throw std::invalid_argument("dilate_scan: polygon must have positive area");
    DilateScan scan;
    scan.d = d;
    scan.points = lattice_points_dilate(p, d);
    if (!scan.points.empty()) {
        std::vector<IVec> pts;
        for (const auto& q : scan.points)
            pts.push_back({q.x, q.y});
        scan.stairs = compute_E(PointSet::of(2, std::move(pts)), MonomialOrder::deglex(2));
    }
    return scan;
}

DilateReport dilate_report(const DilateScan& scan) {
    DilateReport rep;
    rep.d = scan.d;
    rep.point_count = static_cast<long>(scan.points.size());
    if (scan.stairs) {
        rep.r = r_value(*scan.stairs);
        rep.s = s_value(*scan.stairs);
        rep.v_est = Rat(*rep.r - 1) / scan.d;
        rep.w_est = Rat(*rep.s) / scan.d;
    }
    return rep;
}

DilateReport dilate_report(const RatPolygon& p, const Rat& d) {
    return dilate_report(dilate_scan(p, d));
}

RatPolygon a_lower(const DilateScan& scan) {
    if (!scan.stairs)
        throw std::invalid_argument("a_lower: dilate has no lattice points");
    std::vector<QPt> pts;
    for (const Exponent& e : scan.stairs->elems)
        pts.push_back({Rat(e[0]) / scan.d, Rat(e[1]) / scan.d});
    return convex_hull_q(std::move(pts));
}

RatPolygon a_lower(const RatPolygon& p, const Rat& d) { return a_lower(dilate_scan(p, d)); }

bool b_contains(const RatPolygon& p, const Rat& d, const QPt& e) {
    if (e.x < 0 || e.y < 0)
        throw std::invalid_argument("b_contains: point must be in the nonnegative quadrant");
    RatPolygon a = a_lower(p, d);
    std::vector<QPt> pts = a.v;
    pts.push_back(e);
    return double_area(convex_hull_q(std::move(pts))) <= double_area(p);
}

SPBracket bracket(const RatPolygon& p, const DilateScan& scan) {
    SPBracket br;
    br.d = scan.d;
    br.point_count = static_cast<long>(scan.points.size());
    br.vol_target = double_area(p) / 2;
    if (!scan.stairs)
        return br;

    long r = r_value(*scan.stairs), s = s_value(*scan.stairs);
    br.v_lo = Rat(r - 1) / scan.d;
    br.w_lo = Rat(s) / scan.d;
    br.a_poly = a_lower(scan);
    if (br.a_poly.dim != 2)
        return br; // outer region unbounded, no upper estimates at this dilate

    std::vector<LinForm> forms = added_area_forms(br.a_poly);
    Rat budget = double_area(p) - double_area(br.a_poly);
    if (budget < 0)
        throw std::logic_error("bracket: inner hull exceeds the target volume");

    QPt origin{Rat(0), Rat(0)};
    std::vector<QPt> xs = line_b_candidates(forms, budget, origin, {Rat(1), Rat(0)});
    std::vector<QPt> ys = line_b_candidates(forms, budget, origin, {Rat(0), Rat(1)});
    if (xs.empty() || ys.empty())
        throw std::logic_error("bracket: axis search failed");
    Rat reach_x(0), reach_y(0);
    for (const auto& q : xs)
        reach_x = std::max(reach_x, q.x);
    for (const auto& q : ys)
        reach_y = std::max(reach_y, q.y);
    br.v_hi = std::min(reach_x, reach_y);

    Rat best(0);
    auto take = [&](const QPt& q) { best = std::max(best, q.x + q.y); };
    for (const auto& q : br.a_poly.v)
        take(q);
    for (const auto& q : xs)
        take(q);
    for (const auto& q : ys)
        take(q);
    for (std::size_t i = 0; i < br.a_poly.v.size(); ++i) {
        const QPt& v = br.a_poly.v[i];
        QPt dir = br.a_poly.v[(i + 1) % br.a_poly.v.size()] - v;
        for (const auto& q : line_b_candidates(forms, budget, v, dir))
            take(q);
    }
    br.w_hi = best;
    return br;
}

SPBracket bracket(const RatPolygon& p, const Rat& d) { return bracket(p, dilate_scan(p, d)); }

TriangleSP triangle_sp_exact(const RatPolygon& p, const FiniteFn& f, const Verdict& cert) {
    if (p.dim != 2 || p.v.size() != 3)
        throw std::invalid_argument("triangle_sp_exact: need a nondegenerate triangle");
    if (cert.status != VerdictStatus::irreducible)
        throw std::invalid_argument("triangle_sp_exact: certificate does not say irreducible");
    if (f.zero() || f.n != 2)
        throw std::invalid_argument("triangle_sp_exact: bad witness function");

    Exponent smf = sm(f, MonomialOrder::deglex(2));
    Rat l = l_ratio(p, to_rat(newton_polytope(f)));
    if (l == 0)
        throw witness_insufficient("witness is a unit");
    QPt e{Rat(smf[0]) / l, Rat(smf[1]) / l};
    Rat w = Rat(smf.degree()) / l;
    Rat two_vol = double_area(p);
    if (w * w < two_vol)
        throw witness_insufficient("witness order too small for this triangle");
    Rat v = two_vol / w;

    TriangleSP out;
    out.poly = convex_hull_q({{Rat(0), Rat(0)}, {v, Rat(0)}, e, {Rat(0), v}});
    out.is_quadrilateral = out.poly.v.size() == 4;
    return out;
}

RatPolygon lex_sp_2d(const RatPolygon& p) {
    if (p.dim != 2)
        throw std::invalid_argument("lex_sp_2d: polygon must have positive area");

    // vertical slice length at fixed x
    auto slice_len = [&](const Rat& x) {
        bool have = false;
        Rat ylo, yhi;
        auto add = [&](const Rat& y) {
            if (!have) {
                ylo = yhi = y;
                have = true;
            } else {
                ylo = std::min(ylo, y);
                yhi = std::max(yhi, y);
            }
        };
        for (std::size_t i = 0; i < p.v.size(); ++i) {
            const QPt& a = p.v[i];
            const QPt& b = p.v[(i + 1) % p.v.size()];
            if (a.x == b.x) {
                if (a.x == x) {
                    add(a.y);
                    add(b.y);
                }
                continue;
            }
            Rat t0 = std::min(a.x, b.x), t1 = std::max(a.x, b.x);
            if (x < t0 || x > t1)
                continue;
            add(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
        }
        return have ? yhi - ylo : Rat(0);
    };

    std::set<Rat> xs;
    for (const auto& q : p.v)
        xs.insert(q.x);
    std::vector<Rat> bx(xs.begin(), xs.end());
    std::vector<Rat> h;
    for (const Rat& x : bx)
        h.push_back(slice_len(x));

    Rat hmax(0);
    for (const Rat& t : h)
        hmax = std::max(hmax, t);

    // measure of {x : slice_len(x) >= t}; slice_len is concave piecewise linear
    auto level_measure = [&](const Rat& t) {
        std::size_t n = bx.size();
        std::size_t li = n, ri = n;
        for (std::size_t i = 0; i < n; ++i)
            if (h[i] >= t) {
                li = i;
                break;
            }
        for (std::size_t i = n; i-- > 0;)
            if (h[i] >= t) {
                ri = i;
                break;
            }
        Rat xl = bx[li], xr = bx[ri];
        if (li > 0 && h[li] > t)
            xl = bx[li - 1] + (t - h[li - 1]) * (bx[li] - bx[li - 1]) / (h[li] - h[li - 1]);
        if (ri + 1 < n && h[ri] > t)
            xr = bx[ri + 1] - (t - h[ri + 1]) * (bx[ri + 1] - bx[ri]) / (h[ri] - h[ri + 1]);
        return xr - xl;
    };

    std::set<Rat> levels(h.begin(), h.end());
    levels.insert(Rat(0));
    std::vector<QPt> verts = {{Rat(0), Rat(0)}, {Rat(0), hmax}};
    for (const Rat& t : levels)
        if (t <= hmax)
            verts.push_back({level_measure(t), t});
    return convex_hull_q(std::move(verts));
}

RatPolygon weighted_triangle(long a, long b, long c, int variant) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("weighted_triangle: weights must be positive");
    Int A(a), B(b), C(c);
    Int g1, al, be;
    mpz_gcdext(g1.get_mpz_t(), al.get_mpz_t(), be.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    Int g2, ga, de;
    mpz_gcdext(g2.get_mpz_t(), ga.get_mpz_t(), de.get_mpz_t(), g1.get_mpz_t(), C.get_mpz_t());
    if (g2 != 1)
        throw std::invalid_argument("weighted_triangle: gcd(a,b,c) must be 1");

    std::array<Int, 3> u1 = {B / g1, -A / g1, Int(0)};
    std::array<Int, 3> u2 = {-C * al, -C * be, g1};
    std::array<Int, 3> s = {ga * al, ga * be, de};
    if (variant == 1) {
        for (int i = 0; i < 3; ++i) {
            s[i] += u1[i];
            u1[i] += u2[i];
        }
    }

    // M has columns u1, u2, s; its inverse is integral since |det| = 1
    Int m[3][3] = {{u1[0], u2[0], s[0]}, {u1[1], u2[1], s[1]}, {u1[2], u2[2], s[2]}};
    Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det != 1 && det != -1)
        throw std::logic_error("weighted_triangle: basis is not unimodular");
    Int inv[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            inv[j][i] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
        }

    std::array<std::array<Rat, 3>, 3> simplex = {{{make_rat(1, a), Rat(0), Rat(0)},
                                                  {Rat(0), make_rat(1, b), Rat(0)},
                                                  {Rat(0), Rat(0), make_rat(1, c)}}};
    std::vector<QPt> verts;
    for (const auto& p : simplex) {
        Rat x = Rat(inv[0][0]) * p[0] + Rat(inv[0][1]) * p[1] + Rat(inv[0][2]) * p[2];
        Rat y = Rat(inv[1][0]) * p[0] + Rat(inv[1][1]) * p[1] + Rat(inv[1][2]) * p[2];
        verts.push_back({x, y});
    }
    RatPolygon tri = convex_hull_q(std::move(verts));
    if (tri.dim != 2)
        throw std::logic_error("weighted_triangle: degenerate image");
    return tri;
}

SeshadriBracket seshadri_bracket(long a, long b, long c, const std::vector<Rat>& schedule,
                                 int variant) {
    RatPolygon p = weighted_triangle(a, b, c, variant);
    SeshadriBracket out;
    std::optional<Rat> w_lo_max, w_hi_min;
    for (const Rat& d : schedule) {
        SPBracket br = bracket(p, d);
        if (br.w_lo)
            w_lo_max = w_lo_max ? std::max(*w_lo_max, *br.w_lo) : *br.w_lo;
        if (br.w_hi)
            w_hi_min = w_hi_min ? std::min(*w_hi_min, *br.w_hi) : *br.w_hi;
        out.per_d.push_back(std::move(br));
    }
    if (w_hi_min && *w_hi_min > 0)
        out.lo = 1 / *w_hi_min;
    if (w_lo_max && *w_lo_max > 0)
        out.hi = 1 / *w_lo_max;
    return out;
}

} // namespace stair
