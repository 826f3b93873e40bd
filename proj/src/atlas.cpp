#include "staircase/atlas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stair {

namespace {

PointSet polygon_points(const LatticePolygon& p) {
    std::vector<IVec> pts;
    for (const auto& q : lattice_points(p))
        pts.push_back({q.x, q.y});
    return PointSet::of(2, std::move(pts));
}

std::vector<Int> flat(const LatticePolygon& p) {
    std::vector<Int> f;
    for (const auto& q : p.v) {
        f.push_back(q.x);
        f.push_back(q.y);
    }
    return f;
}

} // namespace

Witness max_order_witness(const LatticePolygon& p) {
    PointSet a = polygon_points(p);
    if (a.size() < 2)
        throw std::invalid_argument("max_order_witness: need at least two lattice points");

    Staircase stairs = compute_E(a, MonomialOrder::deglex(2));
    long m = s_value(stairs);

    // kernel of "all pairings of degree < m vanish"
    std::vector<Exponent> low;
    for (int i = 0; i <= static_cast<int>(m) - 1; ++i)
        for (int j = 0; i + j <= static_cast<int>(m) - 1; ++j)
            low.push_back(Exponent({i, j}));
    RatMatrix sys(low.size(), a.size());
    for (std::size_t r = 0; r < low.size(); ++r)
        for (std::size_t i = 0; i < a.size(); ++i) {
            Int prod(1), px, py;
            mpz_pow_ui(px.get_mpz_t(), a.pts[i][0].get_mpz_t(), low[r][0]);
            mpz_pow_ui(py.get_mpz_t(), a.pts[i][1].get_mpz_t(), low[r][1]);
            prod = px * py;
            sys.at(r, i) = Rat(prod);
        }
    std::vector<std::vector<Rat>> kernel = kernel_basis(sys);
    if (kernel.empty())
        throw std::logic_error("max_order_witness: empty kernel");

    Witness w;
    w.polygon = p;
    w.m = m;
    w.space_dim = static_cast<long>(kernel.size());

    long top = 0;
    for (const Exponent& e : stairs.elems)
        if (e.degree() == m)
            ++top;
    if (top != w.space_dim)
        throw std::logic_error("max_order_witness: kernel dimension mismatch");

    const std::vector<Rat>& k0 = kernel.front();
    FiniteFn f;
    f.n = 2;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (k0[i] != 0)
            f.terms[a.pts[i]] = k0[i];
    // scale so the (y,x)-largest support point has value 1
    Rat anchor = f.terms.rbegin()->second; // points are stored sorted by (y,x)
    for (auto& [pt, c] : f.terms)
        c /= anchor;
    w.f = std::move(f);
    return w;
}

bool is_large(const Witness& w) {
    Int m2 = Int(w.m) * Int(w.m);
    return m2 > double_area(newton_polytope(w.f));
}

Verdict decide_irreducible(const Witness& w) {
    Verdict v;
    LatticePolygon np = newton_polytope(w.f);
    if (!(np == w.polygon)) {
        v.status = VerdictStatus::inconclusive;
        v.reason = "newton polytope differs from the ambient polygon";
        return v;
    }

    if (np.dim == 1) {
        // one variable after a lattice change: (t-1)^g, irreducible iff g = 1
        IPt d = np.v[1] - np.v[0];
        Int g;
        mpz_gcd(g.get_mpz_t(), d.x.get_mpz_t(), d.y.get_mpz_t());
        if (g == 1) {
            v.status = VerdictStatus::irreducible;
        } else {
            v.status = VerdictStatus::reducible;
            LatticePolygon unit{{{Int(0), Int(0)}, {Int(1), Int(0)}}, 1};
            LatticePolygon rest{{{Int(0), Int(0)}, {g - 1, Int(0)}}, 1};
            v.decomposition = {unit, rest};
        }
        return v;
    }

    auto decomps = minkowski_decompositions(np);
    if (decomps.empty()) {
        v.status = VerdictStatus::irreducible;
        return v;
    }
    if (w.space_dim != 1) {
        v.status = VerdictStatus::inconclusive;
        v.reason = "top-order space has dimension > 1 and the polygon decomposes";
        return v;
    }
    for (const auto& [q1, q2] : decomps) {
        long s1 = s_value(polygon_points(q1));
        long s2 = s_value(polygon_points(q2));
        if (s1 + s2 >= w.m) {
            v.status = VerdictStatus::reducible;
            v.decomposition = {q1, q2};
            return v;
        }
    }
    v.status = VerdictStatus::irreducible;
    return v;
}

AtlasResult atlas_search(long max_double_area) {
    AtlasResult res;
    for (const LatticePolygon& p : enumerate_polygons(max_double_area)) {
        Witness w = max_order_witness(p);
        if (!is_large(w))
            continue;
        Verdict v = decide_irreducible(w);
        AtlasRow row;
        row.polygon = p;
        row.m = w.m;
        row.two_vol = double_area(p);
        row.witness = w;
        row.verdict = v;
        if (v.status == VerdictStatus::inconclusive)
            res.inconclusive.push_back(std::move(row));
        else if (v.status == VerdictStatus::irreducible && newton_polytope(w.f) == p)
            res.rows.push_back(std::move(row));
    }
    std::sort(res.rows.begin(), res.rows.end(), [](const AtlasRow& a, const AtlasRow& b) {
        if (a.two_vol != b.two_vol)
            return a.two_vol < b.two_vol;
        if (a.m != b.m)
            return a.m < b.m;
        return flat(a.polygon) < flat(b.polygon);
    });
    return res;
}

LatticePolygon family_triangle(long r) {
    if (r < 1)
        throw std::invalid_argument("family_triangle: r must be positive");
    return convex_hull({{Int(0), Int(0)}, {Int(r), Int(0)}, {Int(-1), Int(r + 2)}});
}

PrReport verify_pr(long r) {
    PrReport rep;
    rep.r = r;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };

    LatticePolygon p = family_triangle(r);
    PointSet a = polygon_points(p);
    Staircase stairs = compute_E(a, MonomialOrder::deglex(2));

    std::set<Exponent> expected;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; i + j <= r; ++j)
            expected.insert(Exponent({i, j}));
    expected.insert(Exponent({static_cast<int>(r + 1), 0}));
    std::set<Exponent> got(stairs.elems.begin(), stairs.elems.end());
    push("staircase", got == expected,
         "corner simplex of degree r plus the lone (r+1,0) element");

    Witness w = max_order_witness(p);
    push("witness order", w.m == r + 1,
         "m = " + std::to_string(w.m) + ", expected " + std::to_string(r + 1));

    bool corners = w.f.coeff({Int(0), Int(0)}) != 0 && w.f.coeff({Int(r), Int(0)}) != 0 &&
                   w.f.coeff({Int(-1), Int(r + 2)}) != 0;
    push("witness support corners", corners, "all three corners must carry support");

    Int da = double_area(p);
    push("double area", da == r * (r + 2), "2vol = " + da.get_str());
    push("largeness", Int(r + 1) * Int(r + 1) > da && is_large(w), "");
    push("newton polytope", newton_polytope(w.f) == p, "");

    Verdict v = decide_irreducible(w);
    push("irreducible", v.status == VerdictStatus::irreducible, v.reason);

    LatticePolygon pn = family_triangle(r + 1);
    Witness wn = max_order_witness(pn);
    Int mv = mixed_volume_2x(p, pn);
    Int expected_mv = Int(r + 2) * Int(r + 1);
    bool mv_ok = mv == expected_mv && Int(w.m) * Int(wn.m) == mv;
    push("mixed volume equality", mv_ok,
         "2vol(P_r, P_{r+1}) = " + mv.get_str() + ", m_r*m_{r+1} = " +
             (Int(w.m) * Int(wn.m)).get_str());

    RelPrimeCheck rp = check_rel_prime_inequality(w.f, wn.f);
    push("relatively prime equality", rp.holds && rp.lhs == rp.rhs,
         rp.lhs.get_str() + " vs " + rp.rhs.get_str());

    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const PrCheck& c) { return c.ok; });
    return rep;
}

RelPrimeCheck check_rel_prime_inequality(const FiniteFn& f1, const FiniteFn& f2) {
    RelPrimeCheck out;
    out.lhs = Int(vanishing_order(f1)) * Int(vanishing_order(f2));
    out.rhs = mixed_volume_2x(newton_polytope(f1), newton_polytope(f2));
    out.holds = out.lhs <= out.rhs;
    return out;
}

} // namespace stair
