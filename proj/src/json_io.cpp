#include "staircase/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stair {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(Int(j.get<long long>()));
    if (j.is_string())
        return rat_parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"num/den\" string");
}

json int_to_json(const Int& x) {
    if (x.fits_slong_p())
        return json(x.get_si());
    return json(x.get_str());
}

} // namespace

PointSet pointset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("points"))
        throw std::invalid_argument("point set needs fields \"n\" and \"points\"");
    int n = j.at("n").get<int>();
    std::vector<IVec> pts;
    for (const auto& row : j.at("points")) {
        IVec p;
        for (const auto& c : row)
            p.push_back(int_from_json(c));
        pts.push_back(std::move(p));
    }
    return PointSet::of(n, std::move(pts));
}

json pointset_to_json(const PointSet& a) {
    json pts = json::array();
    for (const auto& p : a.pts) {
        json row = json::array();
        for (const auto& c : p)
            row.push_back(int_to_json(c));
        pts.push_back(row);
    }
    return json{{"n", a.n}, {"points", pts}};
}

FiniteFn finitefn_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("function needs fields \"n\" and \"terms\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<IVec, Rat>> terms;
    for (const auto& t : j.at("terms")) {
        IVec p;
        for (const auto& c : t.at("p"))
            p.push_back(int_from_json(c));
        terms.push_back({std::move(p), rat_from_json(t.at("c"))});
    }
    return FiniteFn::of(n, std::move(terms));
}

json finitefn_to_json(const FiniteFn& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms) {
        json pt = json::array();
        for (const auto& x : p)
            pt.push_back(int_to_json(x));
        terms.push_back(json{{"p", pt}, {"c", rat_str(c)}});
    }
    return json{{"n", f.n}, {"terms", terms}};
}

RatPolygon ratpolygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw std::invalid_argument("polygon needs a \"vertices\" field");
    std::vector<QPt> pts;
    for (const auto& row : j.at("vertices")) {
        if (row.size() != 2)
            throw std::invalid_argument("polygon vertices must be pairs");
        pts.push_back({rat_from_json(row[0]), rat_from_json(row[1])});
    }
    return convex_hull_q(std::move(pts));
}

json ratpolygon_to_json(const RatPolygon& p) {
    json verts = json::array();
    for (const auto& q : p.v)
        verts.push_back(json::array({rat_str(q.x), rat_str(q.y)}));
    return json{{"dim", p.dim}, {"vertices", verts}};
}

json latticepolygon_to_json(const LatticePolygon& p) {
    json verts = json::array();
    for (const auto& q : p.v)
        verts.push_back(json::array({int_to_json(q.x), int_to_json(q.y)}));
    return json{{"dim", p.dim}, {"vertices", verts}};
}

json staircase_to_json(const Staircase& e) {
    json elems = json::array();
    for (const Exponent& x : e.elems)
        elems.push_back(x.c);
    return json{{"order", e.order.str()},
                {"elements", elems},
                {"count", e.elems.size()},
                {"r", r_value(e)},
                {"s", s_value(e)}};
}

json dilate_report_to_json(const DilateReport& rep) {
    json j{{"d", rat_str(rep.d)}, {"point_count", rep.point_count}};
    if (rep.r) {
        j["r"] = *rep.r;
        j["s"] = *rep.s;
        j["v_est"] = rat_str(*rep.v_est);
        j["w_est"] = rat_str(*rep.w_est);
    } else {
        j["empty"] = true;
    }
    return j;
}

json bracket_to_json(const SPBracket& br) {
    json j{{"d", rat_str(br.d)},
           {"point_count", br.point_count},
           {"vol_target", rat_str(br.vol_target)}};
    if (br.v_lo)
        j["v_lo"] = rat_str(*br.v_lo);
    if (br.w_lo)
        j["w_lo"] = rat_str(*br.w_lo);
    if (br.v_hi)
        j["v_hi"] = rat_str(*br.v_hi);
    if (br.w_hi)
        j["w_hi"] = rat_str(*br.w_hi);
    if (br.point_count > 0)
        j["a_poly"] = ratpolygon_to_json(br.a_poly);
    return j;
}

json witness_to_json(const Witness& w) {
    return json{{"polygon", latticepolygon_to_json(w.polygon)},
                {"f", finitefn_to_json(w.f)},
                {"m", w.m},
                {"space_dim", w.space_dim}};
}

json verdict_to_json(const Verdict& v) {
    json j;
    switch (v.status) {
    case VerdictStatus::irreducible:
        j["status"] = "irreducible";
        break;
    case VerdictStatus::reducible:
        j["status"] = "reducible";
        break;
    case VerdictStatus::inconclusive:
        j["status"] = "inconclusive";
        j["reason"] = v.reason;
        break;
    }
    if (v.decomposition) {
        j["decomposition"] = json::array({latticepolygon_to_json(v.decomposition->first),
                                          latticepolygon_to_json(v.decomposition->second)});
    }
    return j;
}

json pr_report_to_json(const PrReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return json{{"r", rep.r}, {"ok", rep.ok}, {"checks", checks}};
}

std::string corners_str(const LatticePolygon& p) {
    std::string s;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        if (i)
            s += ",";
        s += "(" + p.v[i].x.get_str() + "," + p.v[i].y.get_str() + ")";
    }
    return s;
}

std::string atlas_to_csv(const AtlasResult& res) {
    std::string out = "corners;sm;two_vol\n";
    for (const auto& row : res.rows)
        out += corners_str(row.polygon) + ";" + std::to_string(row.m) + ";" +
               row.two_vol.get_str() + "\n";
    for (const auto& row : res.inconclusive)
        out += "# inconclusive: " + corners_str(row.polygon) + ";" + std::to_string(row.m) +
               ";" + row.two_vol.get_str() + " (" + row.verdict.reason + ")\n";
    return out;
}

json atlas_to_json(const AtlasResult& res) {
    json rows = json::array(), inc = json::array();
    auto row_json = [](const AtlasRow& row) {
        return json{{"corners", corners_str(row.polygon)},
                    {"sm", row.m},
                    {"two_vol", int_to_json(row.two_vol)},
                    {"witness", witness_to_json(row.witness)},
                    {"verdict", verdict_to_json(row.verdict)}};
    };
    for (const auto& row : res.rows)
        rows.push_back(row_json(row));
    for (const auto& row : res.inconclusive)
        inc.push_back(row_json(row));
    return json{{"rows", rows}, {"inconclusive", inc}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

} // namespace stair
