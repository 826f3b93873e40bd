#include "staircase/check.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "staircase/atlas.hpp"
#include "staircase/engine.hpp"
#include "staircase/geometry.hpp"
#include "staircase/linalg.hpp"
#include "staircase/orders.hpp"
#include "staircase/spolytope.hpp"

namespace stair {

namespace {

// mt19937_64 is fully specified, and we draw with plain modulo, so the same
// seed produces the same cases on every platform
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(g() % (hi - lo + 1)); }
};

struct Suite {
    Rng rng;
    CheckSummary out;
    explicit Suite(std::uint64_t seed) : rng(seed) {}

    void expect(bool ok, const std::string& check, const std::string& detail) {
        ++out.checks_run;
        if (!ok)
            out.violations.push_back({check, detail});
    }

    Rat rand_rat(long lo, long hi, long den_max) {
        return make_rat(rng.uniform(lo, hi), rng.uniform(1, den_max));
    }

    RatMatrix rand_matrix(long max_dim) {
        RatMatrix m(rng.uniform(1, max_dim), rng.uniform(1, max_dim));
        for (auto& x : m.a)
            x = Rat(rng.uniform(-4, 4));
        return m;
    }

    PointSet rand_points(int n, long max_pts, long lo = -4, long hi = 6) {
        std::set<IVec> uniq;
        long want = rng.uniform(1, max_pts);
        while (static_cast<long>(uniq.size()) < want) {
            IVec p;
            for (int i = 0; i < n; ++i)
                p.push_back(Int(rng.uniform(lo, hi)));
            uniq.insert(p);
        }
        return PointSet::of(n, {uniq.begin(), uniq.end()});
    }

    FiniteFn rand_fn(int n, long max_terms) {
        FiniteFn f;
        f.n = n;
        long want = rng.uniform(1, max_terms);
        while (static_cast<long>(f.terms.size()) < want) {
            IVec p;
            for (int i = 0; i < n; ++i)
                p.push_back(Int(rng.uniform(-3, 4)));
            long c = rng.uniform(-5, 5);
            if (c != 0)
                f.terms[p] = Rat(c);
        }
        return f;
    }

    LatticePolygon rand_polygon(long span = 5, long max_pts = 6) {
        std::vector<IPt> pts;
        long want = rng.uniform(1, max_pts);
        for (long i = 0; i < want; ++i)
            pts.push_back({Int(rng.uniform(-span, span)), Int(rng.uniform(-span, span))});
        return convex_hull(pts);
    }

    LatticePolygon rand_polygon_dim2(long span = 5) {
        for (;;) {
            LatticePolygon p = rand_polygon(span);
            if (p.dim == 2)
                return p;
        }
    }

    // random x -> Ux + t with det(U) = +-1
    struct Affine {
        Int u00, u01, u10, u11, tx, ty;
        IPt apply(const IPt& p) const {
            return {u00 * p.x + u01 * p.y + tx, u10 * p.x + u11 * p.y + ty};
        }
    };

    Affine rand_unimodular() {
        Int a(1), b(0), c(0), d(1);
        long steps = rng.uniform(1, 4);
        for (long i = 0; i < steps; ++i) {
            switch (rng.uniform(0, 3)) {
            case 0: { // shear right
                Int k(rng.uniform(-3, 3));
                b += a * k;
                d += c * k;
                break;
            }
            case 1: { // shear down
                Int k(rng.uniform(-3, 3));
                a += b * k;
                c += d * k;
                break;
            }
            case 2: // swap columns (det flips)
                std::swap(a, b);
                std::swap(c, d);
                break;
            default: // negate a column (det flips)
                a = -a;
                c = -c;
            }
        }
        return {a, b, c, d, Int(rng.uniform(-4, 4)), Int(rng.uniform(-4, 4))};
    }

    LatticePolygon apply(const Affine& t, const LatticePolygon& p) {
        std::vector<IPt> pts;
        for (const auto& q : p.v)
            pts.push_back(t.apply(q));
        return convex_hull(pts);
    }

    RatPolygon rand_rat_polygon_dim2(long coord_max = 2, long den_max = 3) {
        for (;;) {
            std::vector<QPt> pts;
            long want = rng.uniform(3, 4);
            for (long i = 0; i < want; ++i)
                pts.push_back({rand_rat(0, coord_max, den_max), rand_rat(0, coord_max, den_max)});
            RatPolygon p = convex_hull_q(pts);
            if (p.dim == 2)
                return p;
        }
    }

    void linalg_checks() {
        for (int rep = 0; rep < 20; ++rep) {
            RatMatrix m = rand_matrix(5);
            RrefResult rr = rref(m);
            auto ker = kernel_basis(m);
            expect(rr.rank + ker.size() == m.cols, "linalg/rank-nullity",
                   "rank " + std::to_string(rr.rank) + " + kernel " +
                       std::to_string(ker.size()) + " != cols " + std::to_string(m.cols));
            for (const auto& v : ker) {
                bool zero = true;
                for (std::size_t i = 0; i < m.rows; ++i) {
                    Rat dot(0);
                    for (std::size_t j = 0; j < m.cols; ++j)
                        dot += m.at(i, j) * v[j];
                    zero = zero && dot == 0;
                }
                expect(zero, "linalg/kernel-annihilates", "M*v != 0");
            }
            RrefResult again = rref(rr.reduced);
            expect(again.reduced.a == rr.reduced.a, "linalg/rref-idempotent", "");

            std::vector<std::size_t> order(m.rows);
            for (std::size_t i = 0; i < m.rows; ++i)
                order[i] = i;
            for (std::size_t i = m.rows; i > 1; --i)
                std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
            RowIndependenceOracle oracle;
            std::size_t accepted = 0;
            for (std::size_t i : order) {
                std::vector<Rat> row(m.cols);
                for (std::size_t j = 0; j < m.cols; ++j)
                    row[j] = m.at(i, j);
                if (oracle.feed(row))
                    ++accepted;
            }
            expect(accepted == rr.rank, "linalg/oracle-rank",
                   "accepted " + std::to_string(accepted) + " != rank " +
                       std::to_string(rr.rank));
        }
    }

    void order_checks() {
        for (int n : {2, 3}) {
            for (OrderKind kind : {OrderKind::deglex, OrderKind::lex}) {
                MonomialOrder o = kind == OrderKind::deglex ? MonomialOrder::deglex(n)
                                                            : MonomialOrder::lex(n);
                for (int rep = 0; rep < 40; ++rep) {
                    auto re = [&] {
                        std::vector<int> c(n);
                        for (int i = 0; i < n; ++i)
                            c[i] = static_cast<int>(rng.uniform(0, 5));
                        return Exponent(c);
                    };
                    Exponent a = re(), b = re(), c = re();
                    int ab = o.cmp(a, b);
                    expect((ab == 0) == (a == b), "orders/strictness", "");
                    expect(ab == -o.cmp(b, a), "orders/antisymmetry", "");
                    if (ab < 0)
                        expect(o.cmp(a + c, b + c) < 0, "orders/additivity", "");
                }
            }
        }
        // stream agrees with sorting, and q_count agrees with brute counting
        MonomialOrder dl = MonomialOrder::deglex(2);
        std::vector<Exponent> big = ascending_exponents(dl, Exponent({12, 12}));
        for (std::size_t i = 1; i < big.size(); ++i)
            expect(dl.less(big[i - 1], big[i]), "orders/stream-sorted", "");
        for (const Exponent& e : big) {
            if (e.degree() > 12)
                continue;
            long brute = 0;
            for (const Exponent& x : big)
                if (dl.less(x, e))
                    ++brute;
            expect(q_count(dl, e) == brute, "orders/q-count",
                   "e = (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")");
        }
    }

    void staircase_checks() {
        for (int n : {2, 3}) {
            MonomialOrder dl = MonomialOrder::deglex(n);
            for (int rep = 0; rep < 8; ++rep) {
                PointSet a = rand_points(n, 8);
                Staircase e = compute_E(a, dl);
                expect(e.elems.size() == a.size(), "staircase/size", "|E| != |A|");
                expect(is_lower_set(e.elems), "staircase/lower-set", "");

                IVec v;
                for (int i = 0; i < n; ++i)
                    v.push_back(Int(rng.uniform(-5, 5)));
                std::vector<IVec> moved;
                for (const auto& p : a.pts) {
                    IVec q = p;
                    for (int i = 0; i < n; ++i)
                        q[i] += v[i];
                    moved.push_back(q);
                }
                Staircase et = compute_E(PointSet::of(n, moved), dl);
                expect(et.elems == e.elems, "staircase/translation-invariance", "");

                // monotonicity under adding points
                PointSet b = a;
                std::set<IVec> have(a.pts.begin(), a.pts.end());
                for (int extra = 0; extra < 3; ++extra) {
                    IVec p;
                    for (int i = 0; i < n; ++i)
                        p.push_back(Int(rng.uniform(-4, 6)));
                    if (have.insert(p).second)
                        b.pts.push_back(p);
                }
                Staircase eb = compute_E(b, dl);
                std::set<Exponent> ebs(eb.elems.begin(), eb.elems.end());
                bool mono = std::all_of(e.elems.begin(), e.elems.end(),
                                        [&](const Exponent& x) { return ebs.count(x) > 0; });
                expect(mono, "staircase/monotone", "E_A not inside E_B");

                // superadditivity across an independent second set
                PointSet c = rand_points(n, 4);
                std::set<IVec> sums;
                for (const auto& p : a.pts)
                    for (const auto& q : c.pts) {
                        IVec s_(n);
                        for (int i = 0; i < n; ++i)
                            s_[i] = p[i] + q[i];
                        sums.insert(s_);
                    }
                Staircase ec = compute_E(c, dl);
                Staircase es = compute_E(PointSet::of(n, {sums.begin(), sums.end()}), dl);
                std::set<Exponent> ess(es.elems.begin(), es.elems.end());
                bool super = true;
                for (const Exponent& x : e.elems)
                    for (const Exponent& y : ec.elems)
                        super = super && ess.count(x + y) > 0;
                expect(super, "staircase/superadditive", "E_A + E_B not inside E_{A+B}");

                // lex recursion against the generic scan
                MonomialOrder lx = MonomialOrder::lex(n);
                Staircase l1 = compute_E(a, lx);
                Staircase l2 = compute_E_lex(a, lx);
                expect(l1.elems == l2.elems, "staircase/lex-cross-oracle", "");
            }
        }

        // lower subsets of N^n are their own staircase
        for (int rep = 0; rep < 6; ++rep) {
            std::set<IVec> lower = {{Int(0), Int(0)}};
            for (int tries = 0; tries < 10; ++tries) {
                IVec p = {Int(rng.uniform(0, 3)), Int(rng.uniform(0, 3))};
                for (Int x = 0; x <= p[0]; ++x)
                    for (Int y = 0; y <= p[1]; ++y)
                        lower.insert({x, y});
            }
            PointSet a = PointSet::of(2, {lower.begin(), lower.end()});
            Staircase e = compute_E(a, MonomialOrder::deglex(2));
            std::set<IVec> back;
            for (const Exponent& x : e.elems)
                back.insert({Int(x[0]), Int(x[1])});
            expect(back == lower, "staircase/lower-fixed-point", "E_A != A for a lower set");
        }

        // convolution: sm additivity and Newton polytope additivity
        for (int rep = 0; rep < 10; ++rep) {
            FiniteFn f = rand_fn(2, 4), g = rand_fn(2, 4);
            FiniteFn h = convolve(f, g);
            if (h.zero())
                continue; // exact cancellation, nothing to compare
            for (const MonomialOrder& o : {MonomialOrder::deglex(2), MonomialOrder::lex(2)}) {
                Exponent lhs = sm(h, o);
                Exponent rhs = sm(f, o) + sm(g, o);
                expect(lhs == rhs, "staircase/sm-convolution", "sm(f*g) != sm(f)+sm(g)");
            }
            LatticePolygon np = minkowski_sum(newton_polytope(f), newton_polytope(g));
            expect(newton_polytope(h) == np, "staircase/np-convolution", "");
        }

        // vanishing order is a lattice invariant
        for (int rep = 0; rep < 8; ++rep) {
            FiniteFn f = rand_fn(2, 4);
            Affine t = rand_unimodular();
            FiniteFn moved;
            moved.n = 2;
            for (const auto& [p, c] : f.terms) {
                IPt q = t.apply({p[0], p[1]});
                moved.terms[{q.x, q.y}] = c;
            }
            expect(vanishing_order(f) == vanishing_order(moved),
                   "staircase/vanishing-order-unimodular", "");
        }
    }

    void geometry_checks() {
        for (int rep = 0; rep < 15; ++rep) {
            LatticePolygon p = rand_polygon();
            Int pts(static_cast<long>(lattice_points(p).size()));
            Int rhs = double_area(p) / 2 + 1 + boundary_count(p) / 2;
            expect(pts == rhs, "geometry/pick", "lattice point count breaks the area identity");

            LatticePolygon q = rand_polygon();
            LatticePolygon sum = minkowski_sum(p, q);
            std::vector<IPt> brute;
            for (const auto& x : p.v)
                for (const auto& y : q.v)
                    brute.push_back(x + y);
            expect(sum == convex_hull(brute), "geometry/minkowski-brute", "");

            Int lhs(static_cast<long>(lattice_points(sum).size()));
            Int cnt = Int(static_cast<long>(lattice_points(p).size())) +
                      Int(static_cast<long>(lattice_points(q).size())) +
                      mixed_volume_2x(p, q) - 1;
            expect(lhs == cnt, "geometry/minkowski-count", "");

            LatticePolygon u = rand_polygon(3);
            auto count = [](const LatticePolygon& poly) {
                return Int(static_cast<long>(lattice_points(poly).size()));
            };
            Int para = count(minkowski_sum(minkowski_sum(u, p), q)) -
                       count(minkowski_sum(u, p)) - count(minkowski_sum(u, q)) + count(u);
            expect(para == mixed_volume_2x(p, q), "geometry/parallelogram", "");

            Affine t = rand_unimodular();
            LatticePolygon tp = apply(t, p);
            expect(unimodular_canonical(p) == unimodular_canonical(tp),
                   "geometry/canonical-orbit", "images of one orbit disagree");
            LatticePolygon canon = unimodular_canonical(p);
            expect(double_area(canon) == double_area(p) &&
                       boundary_count(canon) == boundary_count(p) &&
                       lattice_points(canon).size() == lattice_points(p).size(),
                   "geometry/canonical-invariants", "");
        }

        for (int rep = 0; rep < 8; ++rep) {
            LatticePolygon p = rand_polygon_dim2(4);
            for (const auto& [q1, q2] : minkowski_decompositions(p)) {
                LatticePolygon sum = minkowski_sum(q1, q2);
                expect(unimodular_canonical(sum) == unimodular_canonical(p) &&
                           double_area(sum) == double_area(p),
                       "geometry/decomposition-sums-back", "");
                expect(lattice_points(q1).size() >= 2 && lattice_points(q2).size() >= 2,
                       "geometry/decomposition-nontrivial", "");
            }
        }
        for (long len = 1; len <= 6; ++len) {
            LatticePolygon seg{{{Int(0), Int(0)}, {Int(len), Int(0)}}, 1};
            auto dec = minkowski_decompositions(seg);
            expect(static_cast<long>(dec.size()) == len / 2, "geometry/segment-splits",
                   "length " + std::to_string(len));
        }

        // l-ratio additivity under Minkowski sums of the measured sets
        for (int rep = 0; rep < 8; ++rep) {
            RatPolygon tri = rand_rat_polygon_dim2(3, 2);
            while (tri.v.size() != 3)
                tri = rand_rat_polygon_dim2(3, 2);
            LatticePolygon a = rand_polygon(3), b = rand_polygon(3);
            std::vector<QPt> av, bv, sv;
            for (const auto& x : a.v)
                av.push_back(to_rat(x));
            for (const auto& x : b.v)
                bv.push_back(to_rat(x));
            for (const auto& x : minkowski_sum(a, b).v)
                sv.push_back(to_rat(x));
            expect(l_ratio(tri, sv) == l_ratio(tri, av) + l_ratio(tri, bv),
                   "geometry/l-ratio-additive", "");
        }
    }

    void spoly_checks() {
        for (int rep = 0; rep < 4; ++rep) {
            RatPolygon p = rand_rat_polygon_dim2();
            std::optional<Rat> prev_v, prev_w;
            std::optional<Staircase> prev_stairs;
            for (long d : {1, 2, 4}) {
                DilateScan scan = dilate_scan(p, Rat(d));
                SPBracket br = bracket(p, scan);
                if (br.v_lo && br.v_hi)
                    expect(*br.v_lo <= *br.v_hi, "spoly/v-bracket", "");
                if (br.w_lo && br.w_hi)
                    expect(*br.w_lo <= *br.w_hi, "spoly/w-bracket", "");
                if (br.v_lo && br.w_lo)
                    expect(*br.v_lo * *br.w_lo <= double_area(p), "spoly/volume-inequality",
                           "v_lo * w_lo exceeds 2vol");
                if (prev_v && br.v_lo)
                    expect(*prev_v <= *br.v_lo && *prev_w <= *br.w_lo, "spoly/monotone-low",
                           "lower estimates decreased along doubling");
                if (br.v_lo) {
                    prev_v = br.v_lo;
                    prev_w = br.w_lo;
                }
                if (scan.stairs && prev_stairs && rep % 2 == 0) {
                    // doubling chain: e in E_d implies 2e in E_2d
                    std::set<Exponent> now(scan.stairs->elems.begin(),
                                           scan.stairs->elems.end());
                    bool chain = true;
                    for (const Exponent& e : prev_stairs->elems)
                        chain = chain && now.count(e + e) > 0;
                    expect(chain, "spoly/doubling-chain", "");
                }
                if (scan.stairs) {
                    prev_stairs = scan.stairs;
                    RatPolygon inner = a_lower(scan);
                    for (const auto& vtx : inner.v)
                        expect(b_contains(p, Rat(d), vtx), "spoly/inner-inside-outer", "");
                }
            }

            RatPolygon sp = lex_sp_2d(p);
            expect(double_area(sp) == double_area(p), "spoly/lex-area", "");
        }

        // a lower convex polygon is its own lex limit body
        RatPolygon lower = convex_hull_q(
            {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(3)}});
        expect(lex_sp_2d(lower) == lower, "spoly/lex-lower-fixed", "");
    }

    void atlas_checks() {
        AtlasResult res = atlas_search(8);
        for (const auto& row : res.rows) {
            expect(Int(row.m) * Int(row.m) > row.two_vol, "atlas/largeness", "");
            Int pts(static_cast<long>(lattice_points(row.polygon).size()));
            expect(pts == row.two_vol / 2 + 1 + boundary_count(row.polygon) / 2,
                   "atlas/pick", "");
            Affine t = rand_unimodular();
            Witness w2 = max_order_witness(apply(t, row.polygon));
            expect(w2.m == row.m && double_area(newton_polytope(w2.f)) == row.two_vol,
                   "atlas/unimodular-stability", "");
            expect(row.verdict.status != VerdictStatus::irreducible || row.witness.space_dim == 1 ||
                       minkowski_decompositions(row.polygon).empty(),
                   "atlas/uniqueness-precondition", "");
        }
        for (std::size_t i = 0; i < res.rows.size(); ++i)
            for (std::size_t j = i + 1; j < res.rows.size(); ++j) {
                RelPrimeCheck rp =
                    check_rel_prime_inequality(res.rows[i].witness.f, res.rows[j].witness.f);
                expect(rp.holds, "atlas/rel-prime-inequality",
                       rp.lhs.get_str() + " > " + rp.rhs.get_str());
            }
        std::set<std::vector<Int>> canon;
        for (const auto& row : res.rows) {
            std::vector<Int> f;
            for (const auto& q : row.polygon.v) {
                f.push_back(q.x);
                f.push_back(q.y);
            }
            expect(canon.insert(f).second, "atlas/distinct-classes", "duplicate canonical form");
        }
    }
};

} // namespace

CheckSummary run_property_suite(std::uint64_t seed) {
    Suite s(seed);
    s.linalg_checks();
    s.order_checks();
    s.staircase_checks();
    s.geometry_checks();
    s.spoly_checks();
    s.atlas_checks();
    return std::move(s.out);
}

} // namespace stair
