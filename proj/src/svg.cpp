#include "staircase/svg.hpp"

namespace stair {

std::string fixed_decimal(const Rat& q, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int n = rat_floor(q * Rat(scale) + make_rat(1, 2)); // round half up
    bool neg = n < 0;
    Int mag = neg ? Int(-n) : n;
    Int ip = mag / scale, fp = mag % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string s = (neg ? "-" : "") + ip.get_str();
    if (digits > 0)
        s += "." + frac;
    return s;
}

namespace {

constexpr int kUnit = 40;   // pixels per world unit
constexpr int kMargin = 24; // per panel, all sides

struct Mapper {
    Rat wy;
    int ox;
    std::string px(const Rat& x) const {
        return fixed_decimal(Rat(ox + kMargin) + x * kUnit, 2);
    }
    std::string py(const Rat& y) const {
        return fixed_decimal(Rat(kMargin) + (wy - y) * kUnit, 2);
    }
};

std::string polygon_path(const Mapper& m, const RatPolygon& poly) {
    std::string d;
    for (std::size_t i = 0; i < poly.v.size(); ++i) {
        d += i == 0 ? "M" : "L";
        d += m.px(poly.v[i].x) + " " + m.py(poly.v[i].y);
    }
    d += "Z";
    return d;
}

} // namespace

std::string render_panels_svg(const std::vector<SvgPanel>& panels, const QPt& world_max) {
    Rat wx = world_max.x, wy = world_max.y;
    Int panel_w = rat_ceil(wx * kUnit) + 2 * kMargin;
    Int panel_h = rat_ceil(wy * kUnit) + 2 * kMargin + 16; // room for the label
    Int total_w = panel_w * static_cast<long>(panels.size());

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + total_w.get_str() +
           " " + panel_h.get_str() + "\">\n";
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const SvgPanel& p = panels[k];
        Mapper m{wy, static_cast<int>((panel_w * static_cast<long>(k)).get_si())};
        if (p.overlay)
            out += "  <path d=\"" + polygon_path(m, *p.overlay) +
                   "\" fill=\"#d8d8d8\" stroke=\"none\"/>\n";
        // axes
        out += "  <line x1=\"" + m.px(Rat(0)) + "\" y1=\"" + m.py(Rat(0)) + "\" x2=\"" +
               m.px(wx) + "\" y2=\"" + m.py(Rat(0)) +
               "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        out += "  <line x1=\"" + m.px(Rat(0)) + "\" y1=\"" + m.py(Rat(0)) + "\" x2=\"" +
               m.px(Rat(0)) + "\" y2=\"" + m.py(wy) +
               "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        if (p.inner)
            out += "  <path d=\"" + polygon_path(m, *p.inner) +
                   "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        for (const QPt& q : p.dots)
            out += "  <circle cx=\"" + m.px(q.x) + "\" cy=\"" + m.py(q.y) +
                   "\" r=\"2.5\" fill=\"#000000\"/>\n";
        out += "  <text x=\"" + m.px(Rat(0)) + "\" y=\"" +
               fixed_decimal(Rat(kMargin) + wy * kUnit + 14, 2) +
               "\" font-family=\"monospace\" font-size=\"12\">" + p.label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace stair
