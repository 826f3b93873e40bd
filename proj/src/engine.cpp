#include "staircase/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stair {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void check_arity(int n, const IVec& p) {
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("point arity mismatch");
}

} // namespace

PointSet PointSet::of(int n, std::vector<IVec> pts) {
    PointSet a;
    a.n = n;
    for (auto& p : pts)
        check_arity(n, p);
    std::set<IVec> uniq(pts.begin(), pts.end());
    if (uniq.size() != pts.size())
        throw std::invalid_argument("PointSet: duplicate points");
    a.pts = std::move(pts);
    return a;
}

FiniteFn FiniteFn::of(int n, std::vector<std::pair<IVec, Rat>> terms) {
    FiniteFn f;
    f.n = n;
    for (auto& [p, c] : terms) {
        check_arity(n, p);
        f.set(p, f.coeff(p) + c);
    }
    return f;
}

void FiniteFn::set(const IVec& p, const Rat& c) {
    check_arity(n, p);
    if (c == 0)
        terms.erase(p);
    else
        terms[p] = c;
}

Rat FiniteFn::coeff(const IVec& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rat(0) : it->second;
}

PointSet FiniteFn::support() const {
    std::vector<IVec> pts;
    for (const auto& [p, c] : terms)
        pts.push_back(p);
    return PointSet::of(n, std::move(pts));
}

FiniteFn delta(const IVec& p) {
    FiniteFn f;
    f.n = static_cast<int>(p.size());
    f.terms[p] = 1;
    return f;
}

bool Staircase::contains(const Exponent& e) const {
    return std::any_of(elems.begin(), elems.end(), [&](const Exponent& x) { return x == e; });
}

long Staircase::max_degree() const {
    long m = 0;
    for (const auto& e : elems)
        m = std::max(m, e.degree());
    return m;
}

long Staircase::min_missing_degree() const {
    // the staircase is a lower set, so it contains the full simplex of each
    // degree below the first incomplete level
    const int n = order.arity();
    std::map<long, Int> level_count;
    for (const auto& e : elems)
        ++level_count[e.degree()];
    for (long t = 0;; ++t) {
        Int full = binom(t + n - 1, n - 1);
        auto it = level_count.find(t);
        Int have = it == level_count.end() ? Int(0) : it->second;
        if (have < full)
            return t;
    }
}

Rat pairing(const FiniteFn& f, const Exponent& e) {
    if (static_cast<int>(e.size()) != f.n)
        throw std::invalid_argument("pairing: arity mismatch");
    Rat acc(0);
    for (const auto& [p, c] : f.terms) {
        Int m(1);
        for (std::size_t i = 0; i < e.size(); ++i)
            m *= int_pow(p[i], e[i]);
        acc += c * Rat(m);
    }
    return acc;
}

namespace {

Exponent support_extents(const FiniteFn& f) {
    IVec lo = f.terms.begin()->first, hi = lo;
    for (const auto& [p, c] : f.terms)
        for (std::size_t i = 0; i < p.size(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    Exponent cap(std::vector<int>(f.n, 0));
    for (int i = 0; i < f.n; ++i)
        cap[i] = static_cast<int>(Int(hi[i] - lo[i]).get_si());
    return cap;
}

} // namespace

Exponent sm(const FiniteFn& f, const MonomialOrder& order) {
    if (f.zero())
        throw std::invalid_argument("sm: zero function");
    if (order.arity() != f.n)
        throw std::invalid_argument("sm: arity mismatch");
    // sm(f) lies in the staircase of supp(f), which sits inside the extent box
    for (const Exponent& e : ascending_exponents(order, support_extents(f)))
        if (pairing(f, e) != 0)
            return e;
    throw std::logic_error("sm: scan exhausted the support box");
}

long vanishing_order(const FiniteFn& f) {
    return sm(f, MonomialOrder::deglex(f.n)).degree();
}

Staircase compute_E(const PointSet& a, const MonomialOrder& order) {
    if (a.pts.empty())
        throw std::invalid_argument("compute_E: empty point set");
    if (order.arity() != a.n)
        throw std::invalid_argument("compute_E: arity mismatch");
    const std::size_t m = a.size();
    const int n = a.n;

    // translate to the nonnegative orthant; the staircase is unchanged and
    // the evaluation entries stay as small as possible
    IVec lo = a.pts[0], hi = a.pts[0];
    for (const auto& p : a.pts)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    Exponent cap(std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        cap[i] = static_cast<int>(Int(hi[i] - lo[i]).get_si());

    // pw[i][axis][k] = translated coordinate ^ k
    std::vector<std::vector<std::vector<Int>>> pw(m);
    for (std::size_t i = 0; i < m; ++i) {
        pw[i].resize(n);
        for (int ax = 0; ax < n; ++ax) {
            Int base = a.pts[i][ax] - lo[ax];
            pw[i][ax].resize(cap[ax] + 1);
            pw[i][ax][0] = 1;
            for (int k = 1; k <= cap[ax]; ++k)
                pw[i][ax][k] = pw[i][ax][k - 1] * base;
        }
    }

    Staircase e;
    e.order = order;
    RowIndependenceOracle oracle;
    std::vector<Rat> v(m);
    for (const Exponent& cand : ascending_exponents(order, cap)) {
        for (std::size_t i = 0; i < m; ++i) {
            Int prod = pw[i][0][cand[0]];
            for (int ax = 1; ax < n; ++ax)
                prod *= pw[i][ax][cand[ax]];
            v[i] = Rat(prod);
        }
        if (oracle.feed(v))
            e.elems.push_back(cand);
        if (e.elems.size() == m)
            break;
    }
    if (e.elems.size() != m)
        throw std::logic_error("compute_E: extent box exhausted before |A| monomials");
    if (!is_lower_set(e.elems))
        throw std::logic_error("compute_E: staircase is not a lower set");
    return e;
}

namespace {

std::vector<Exponent> lex_rec(const std::vector<IVec>& pts, int n) {
    if (n == 1)
        return [&] {
            std::vector<Exponent> e;
            for (std::size_t k = 0; k < pts.size(); ++k)
                e.push_back(Exponent({static_cast<int>(k)}));
            return e;
        }();

    std::map<Int, std::vector<IVec>> fibers;
    for (const auto& p : pts)
        fibers[p[0]].emplace_back(p.begin() + 1, p.end());

    std::map<Exponent, int> tail_count;
    for (const auto& [x, fiber] : fibers)
        for (const Exponent& t : lex_rec(fiber, n - 1))
            ++tail_count[t];

    std::vector<Exponent> out;
    for (const auto& [tail, cnt] : tail_count)
        for (int e1 = 0; e1 < cnt; ++e1) {
            std::vector<int> full = {e1};
            full.insert(full.end(), tail.c.begin(), tail.c.end());
            out.push_back(Exponent(std::move(full)));
        }
    return out;
}

} // namespace

Staircase compute_E_lex(const PointSet& a) {
    return compute_E_lex(a, MonomialOrder::lex(a.n));
}

Staircase compute_E_lex(const PointSet& a, const MonomialOrder& order) {
    if (a.pts.empty())
        throw std::invalid_argument("compute_E_lex: empty point set");
    if (order.kind != OrderKind::lex || order.arity() != a.n)
        throw std::invalid_argument("compute_E_lex: needs a lex order of matching arity");

    // relabel so the recursion always peels the smallest variable first
    std::vector<IVec> relabeled;
    for (const auto& p : a.pts) {
        IVec q(a.n);
        for (int i = 0; i < a.n; ++i)
            q[i] = p[order.prio[i]];
        relabeled.push_back(std::move(q));
    }
    std::vector<Exponent> std_elems = lex_rec(relabeled, a.n);

    Staircase e;
    e.order = order;
    for (const Exponent& s : std_elems) {
        Exponent back(std::vector<int>(a.n, 0));
        for (int i = 0; i < a.n; ++i)
            back[order.prio[i]] = s[i];
        e.elems.push_back(back);
    }
    std::sort(e.elems.begin(), e.elems.end(),
              [&](const Exponent& x, const Exponent& y) { return order.less(x, y); });
    return e;
}

long r_value(const Staircase& e) { return e.min_missing_degree(); }
long s_value(const Staircase& e) { return e.max_degree(); }

long r_value(const PointSet& a) { return r_value(compute_E(a, MonomialOrder::deglex(a.n))); }
long s_value(const PointSet& a) { return s_value(compute_E(a, MonomialOrder::deglex(a.n))); }

FiniteFn witness(const PointSet& a, const MonomialOrder& order, const Exponent& e) {
    Staircase stairs = compute_E(a, order);
    if (!stairs.contains(e))
        throw std::invalid_argument("witness: exponent not in the staircase");

    std::vector<Exponent> below;
    for (const Exponent& s : stairs.elems)
        if (order.less(s, e))
            below.push_back(s);

    const std::size_t m = a.size();
    RatMatrix sys(below.size() + 1, m + 1);
    auto eval_row = [&](std::size_t row, const Exponent& exp) {
        for (std::size_t i = 0; i < m; ++i) {
            Int prod(1);
            for (int ax = 0; ax < a.n; ++ax)
                prod *= int_pow(a.pts[i][ax], exp[ax]);
            sys.at(row, i) = Rat(prod);
        }
    };
    for (std::size_t r = 0; r < below.size(); ++r)
        eval_row(r, below[r]);
    eval_row(below.size(), e);
    sys.at(below.size(), m) = 1;

    RrefResult rr = rref(sys);
    std::vector<Rat> x(m, Rat(0));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] == m)
            throw std::logic_error("witness: inconsistent system");
        x[rr.pivots[r]] = rr.reduced.at(r, m);
    }

    FiniteFn f;
    f.n = a.n;
    for (std::size_t i = 0; i < m; ++i)
        if (x[i] != 0)
            f.terms[a.pts[i]] = x[i];
    return f;
}

FiniteFn convolve(const FiniteFn& f, const FiniteFn& g) {
    if (f.n != g.n)
        throw std::invalid_argument("convolve: arity mismatch");
    FiniteFn h;
    h.n = f.n;
    for (const auto& [p, cp] : f.terms)
        for (const auto& [q, cq] : g.terms) {
            IVec s(f.n);
            for (int i = 0; i < f.n; ++i)
                s[i] = p[i] + q[i];
            auto it = h.terms.find(s);
            if (it == h.terms.end())
                h.terms[s] = cp * cq;
            else {
                it->second += cp * cq;
                if (it->second == 0)
                    h.terms.erase(it);
            }
        }
    return h;
}

LatticePolygon newton_polytope(const FiniteFn& f) {
    if (f.n != 2)
        throw std::invalid_argument("newton_polytope: only n = 2 is supported");
    if (f.zero())
        throw std::invalid_argument("newton_polytope: zero function");
    std::vector<IPt> pts;
    for (const auto& [p, c] : f.terms)
        pts.push_back({p[0], p[1]});
    return convex_hull(pts);
}

} // namespace stair
