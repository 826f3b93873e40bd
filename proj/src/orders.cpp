#include "staircase/orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stair {

MonomialOrder MonomialOrder::deglex(int n) {
    MonomialOrder o;
    o.kind = OrderKind::deglex;
    o.prio.resize(n);
    std::iota(o.prio.begin(), o.prio.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::lex(int n) {
    MonomialOrder o = deglex(n);
    o.kind = OrderKind::lex;
    return o;
}

MonomialOrder MonomialOrder::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    MonomialOrder o;
    if (kind == "deglex")
        o.kind = OrderKind::deglex;
    else if (kind == "lex")
        o.kind = OrderKind::lex;
    else
        throw std::invalid_argument("unknown monomial order kind '" + kind + "'");

    if (colon == std::string::npos)
        throw std::invalid_argument("order spec needs a variable list, e.g. deglex:x1<x2");

    std::string vars = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < vars.size()) {
        if (vars[pos] != 'x')
            throw std::invalid_argument("bad variable in order spec: " + vars);
        std::size_t end = pos + 1;
        while (end < vars.size() && isdigit(static_cast<unsigned char>(vars[end])))
            ++end;
        if (end == pos + 1)
            throw std::invalid_argument("bad variable in order spec: " + vars);
        int idx = std::stoi(vars.substr(pos + 1, end - pos - 1));
        if (idx < 1)
            throw std::invalid_argument("variables are 1-based in order specs");
        o.prio.push_back(idx - 1);
        pos = end;
        if (pos < vars.size()) {
            if (vars[pos] != '<')
                throw std::invalid_argument("expected '<' in order spec: " + vars);
            ++pos;
        }
    }
    std::vector<int> sorted = o.prio;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw std::invalid_argument("order spec must list x1..xn exactly once");
    return o;
}

std::string MonomialOrder::str() const {
    std::string s = kind == OrderKind::deglex ? "deglex:" : "lex:";
    for (std::size_t i = 0; i < prio.size(); ++i) {
        if (i)
            s += '<';
        s += 'x' + std::to_string(prio[i] + 1);
    }
    return s;
}

int MonomialOrder::cmp(const Exponent& a, const Exponent& b) const {
    if (a.size() != prio.size() || b.size() != prio.size())
        throw std::invalid_argument("MonomialOrder::cmp: arity mismatch");
    if (kind == OrderKind::deglex) {
        long da = a.degree(), db = b.degree();
        if (da != db)
            return da < db ? -1 : 1;
    }
    for (int i = arity() - 1; i >= 0; --i) {
        int v = prio[i];
        if (a[v] != b[v])
            return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

std::vector<Exponent> ascending_exponents(const MonomialOrder& order, const Exponent& cap) {
    if (static_cast<int>(cap.size()) != order.arity())
        throw std::invalid_argument("ascending_exponents: arity mismatch");
    for (int x : cap.c)
        if (x < 0)
            throw std::invalid_argument("ascending_exponents: negative cap");

    std::vector<Exponent> box;
    Exponent cur(std::vector<int>(cap.size(), 0));
    for (;;) {
        box.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size()) {
            if (cur[i] < cap[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size())
            break;
    }
    std::sort(box.begin(), box.end(),
              [&](const Exponent& x, const Exponent& y) { return order.less(x, y); });
    return box;
}

long q_count(const MonomialOrder& order, const Exponent& e) {
    if (order.arity() != 2 || e.size() != 2 || order.kind != OrderKind::deglex)
        throw std::invalid_argument("q_count: only deglex in two variables is supported");
    long d = e.degree();
    return d * (d + 1) / 2 + e[order.prio[1]];
}

bool is_lower_set(const std::set<Exponent>& s) {
    for (const Exponent& e : s) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            Exponent below = e;
            --below[i];
            if (!s.count(below))
                return false;
        }
    }
    return true;
}

bool is_lower_set(const std::vector<Exponent>& s) {
    return is_lower_set(std::set<Exponent>(s.begin(), s.end()));
}

} // namespace stair
