#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "staircase/cache.hpp"
#include "staircase/check.hpp"
#include "staircase/json_io.hpp"
#include "staircase/svg.hpp"

namespace {

using namespace stair;

constexpr const char* kVersion = "staircase 1.0";

struct Payload {
    std::string out; // stdout bytes
    std::string svg; // side file bytes, may be empty
};

std::string envelope(const Payload& p) {
    return std::to_string(p.out.size()) + "\n" + p.out + p.svg;
}

std::optional<Payload> unenvelope(const std::string& blob) {
    auto nl = blob.find('\n');
    if (nl == std::string::npos)
        return std::nullopt;
    std::size_t n = std::stoul(blob.substr(0, nl));
    if (blob.size() < nl + 1 + n)
        return std::nullopt;
    return Payload{blob.substr(nl + 1, n), blob.substr(nl + 1 + n)};
}

std::vector<Rat> parse_schedule(const std::string& s) {
    std::vector<Rat> ds;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos)
            comma = s.size();
        Rat d = rat_parse(s.substr(pos, comma - pos));
        if (d <= 0)
            throw std::invalid_argument("dilation factors must be positive");
        ds.push_back(d);
        pos = comma + 1;
    }
    if (ds.empty())
        throw std::invalid_argument("empty dilation schedule");
    return ds;
}

// run with caching: key is the command name, canonical options, and the raw
// input bytes, so identical invocations replay identical payloads
Payload cached(const std::string& key_material, bool use_cache,
               const std::function<Payload()>& compute) {
    if (use_cache && cache_enabled()) {
        if (auto hit = cache_lookup(key_material)) {
            if (auto p = unenvelope(*hit))
                return *p;
        }
        Payload p = compute();
        cache_store(key_material, envelope(p));
        return p;
    }
    return compute();
}

void deliver(const Payload& p, const std::string& svg_path) {
    std::fwrite(p.out.data(), 1, p.out.size(), stdout);
    if (!svg_path.empty())
        write_file(svg_path, p.svg);
}

Payload run_staircase(const std::string& input, const std::string& order_spec, bool want_svg) {
    PointSet a = pointset_from_json(json::parse(input));
    MonomialOrder order = MonomialOrder::parse(order_spec);
    Staircase e = (order.kind == OrderKind::lex) ? compute_E_lex(a, order)
                                                 : compute_E(a, order);
    Payload p;
    p.out = staircase_to_json(e).dump(2) + "\n";
    if (want_svg) {
        SvgPanel panel;
        panel.label = "staircase";
        long mx = 1, my = 1;
        for (const Exponent& x : e.elems) {
            panel.dots.push_back({Rat(x[0]), Rat(x[1])});
            mx = std::max(mx, static_cast<long>(x[0]));
            my = std::max(my, static_cast<long>(x[1]));
        }
        p.svg = render_panels_svg({panel}, {Rat(mx + 1), Rat(my + 1)});
    }
    return p;
}

Payload run_spoly(const std::string& input, const std::vector<Rat>& schedule,
                  const std::string& witness_input, const std::string& format, bool want_svg) {
    RatPolygon poly = ratpolygon_from_json(json::parse(input));

    std::optional<FiniteFn> wf;
    std::optional<TriangleSP> sp;
    if (!witness_input.empty()) {
        wf = finitefn_from_json(json::parse(witness_input));
        LatticePolygon np = newton_polytope(*wf);
        Witness mw = max_order_witness(np);
        // the certificate machinery covers maximal-order functions only
        Rat ratio;
        bool proportional = mw.f.terms.size() == wf->terms.size();
        if (proportional) {
            auto it = mw.f.terms.begin();
            auto jt = wf->terms.begin();
            ratio = jt->second / it->second;
            for (; proportional && it != mw.f.terms.end(); ++it, ++jt)
                proportional = jt != wf->terms.end() && it->first == jt->first &&
                               jt->second == it->second * ratio;
        }
        if (!proportional)
            throw std::invalid_argument(
                "witness is not the maximal-order function of its Newton polytope");
        Verdict cert = decide_irreducible(mw);
        sp = triangle_sp_exact(poly, *wf, cert);
    }

    std::vector<DilateScan> scans;
    for (const Rat& d : schedule)
        scans.push_back(dilate_scan(poly, d));

    json reports = json::array(), brackets = json::array();
    for (const DilateScan& scan : scans) {
        reports.push_back(dilate_report_to_json(dilate_report(scan)));
        brackets.push_back(bracket_to_json(bracket(poly, scan)));
    }
    json out{{"polygon", ratpolygon_to_json(poly)},
             {"reports", reports},
             {"brackets", brackets}};
    if (sp) {
        out["sp_exact"] = ratpolygon_to_json(sp->poly);
        out["sp_shape"] = sp->is_quadrilateral ? "quadrilateral" : "triangle";
    }

    Payload p;
    if (format == "csv") {
        std::string csv = "d;point_count;r;s;v_est;w_est;v_lo;v_hi;w_lo;w_hi\n";
        for (const DilateScan& scan : scans) {
            DilateReport rep = dilate_report(scan);
            SPBracket br = bracket(poly, scan);
            auto opt_long = [](const std::optional<long>& x) {
                return x ? std::to_string(*x) : std::string("-");
            };
            auto opt_rat = [](const std::optional<Rat>& x) {
                return x ? rat_str(*x) : std::string("-");
            };
            csv += rat_str(rep.d) + ";" + std::to_string(rep.point_count) + ";" +
                   opt_long(rep.r) + ";" + opt_long(rep.s) + ";" + opt_rat(rep.v_est) + ";" +
                   opt_rat(rep.w_est) + ";" + opt_rat(br.v_lo) + ";" + opt_rat(br.v_hi) + ";" +
                   opt_rat(br.w_lo) + ";" + opt_rat(br.w_hi) + "\n";
        }
        p.out = csv;
    } else {
        p.out = out.dump(2) + "\n";
    }

    if (want_svg) {
        std::vector<SvgPanel> panels;
        Rat wmax(1);
        for (const DilateScan& scan : scans) {
            SvgPanel panel;
            panel.label = "d = " + rat_display(scan.d);
            if (scan.stairs) {
                for (const Exponent& e : scan.stairs->elems) {
                    QPt dot{Rat(e[0]) / scan.d, Rat(e[1]) / scan.d};
                    wmax = std::max({wmax, dot.x, dot.y});
                    panel.dots.push_back(dot);
                }
                panel.inner = a_lower(scan);
            }
            if (sp) {
                panel.overlay = sp->poly;
                for (const QPt& q : sp->poly.v)
                    wmax = std::max({wmax, q.x, q.y});
            }
            panels.push_back(std::move(panel));
        }
        p.svg = render_panels_svg(panels, {wmax + make_rat(1, 2), wmax + make_rat(1, 2)});
    }
    return p;
}

Payload run_seshadri(long a, long b, long c, const std::vector<Rat>& schedule,
                     const std::string& format) {
    SeshadriBracket sb = seshadri_bracket(a, b, c, schedule);
    Payload p;
    if (format == "json") {
        json j{{"a", a}, {"b", b}, {"c", c}};
        j["lo"] = sb.lo ? json(rat_str(*sb.lo)) : json(nullptr);
        j["hi"] = sb.hi ? json(rat_str(*sb.hi)) : json(nullptr);
        json per = json::array();
        for (const SPBracket& br : sb.per_d)
            per.push_back(bracket_to_json(br));
        j["per_d"] = per;
        p.out = j.dump(2) + "\n";
    } else {
        p.out = "seshadri(" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ") in [" + (sb.lo ? rat_display(*sb.lo) : "?") + ", " +
                (sb.hi ? rat_display(*sb.hi) : "?") + "]\n";
    }
    return p;
}

Payload run_atlas(long max_two_vol, const std::string& format, bool* any_inconclusive) {
    AtlasResult res = atlas_search(max_two_vol);
    *any_inconclusive = !res.inconclusive.empty();
    Payload p;
    if (format == "json")
        p.out = atlas_to_json(res).dump(2) + "\n";
    else
        p.out = atlas_to_csv(res);
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact staircases, limit bodies, and large irreducible supports"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "bypass the result cache");

    std::string points_file, order_spec = "deglex:x1<x2", svg_out;
    auto* sc_stair = app.add_subcommand("staircase", "staircase of a point set");
    sc_stair->add_option("points", points_file, "point set JSON file")->required();
    sc_stair->add_option("--order", order_spec, "monomial order, e.g. deglex:x1<x2");
    sc_stair->add_option("--svg", svg_out, "write a staircase plot");

    std::string poly_file, schedule_str = "1,2,4,8", witness_file, format = "json";
    auto* sc_spoly = app.add_subcommand("spoly", "dilate scans and limit-body brackets");
    sc_spoly->add_option("polygon", poly_file, "polygon JSON file")->required();
    sc_spoly->add_option("--d-schedule", schedule_str, "comma-separated dilation factors");
    sc_spoly->add_option("--witness", witness_file, "irreducible witness JSON, enables the exact body");
    sc_spoly->add_option("--format", format, "json or csv");
    sc_spoly->add_option("--svg", svg_out, "write dilate panels");

    long wa = 0, wb = 0, wc = 0;
    std::string sesh_format = "text";
    auto* sc_sesh = app.add_subcommand("seshadri", "Seshadri constant bracket of P^{a,b,c}");
    sc_sesh->add_option("a", wa)->required();
    sc_sesh->add_option("b", wb)->required();
    sc_sesh->add_option("c", wc)->required();
    sc_sesh->add_option("--d-schedule", schedule_str, "comma-separated dilation factors");
    sc_sesh->add_option("--format", sesh_format, "text or json");

    long max_two_vol = 0;
    bool strict = false;
    std::string atlas_format = "csv", atlas_out;
    auto* sc_atlas = app.add_subcommand("atlas", "catalog of large irreducible supports");
    sc_atlas->add_option("--max-2vol", max_two_vol, "double-area bound")->required();
    sc_atlas->add_flag("--strict", strict, "fail when any verdict is inconclusive");
    sc_atlas->add_option("--format", atlas_format, "csv or json");
    sc_atlas->add_option("--out", atlas_out, "write to a file instead of stdout");

    long family_r = 0;
    auto* sc_pr = app.add_subcommand("verify-pr", "verify the spike-triangle family row");
    sc_pr->add_option("r", family_r, "family parameter")->required();

    std::uint64_t seed = 0;
    auto* sc_check = app.add_subcommand("check", "run the seeded property suite");
    sc_check->add_option("--seed", seed, "suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sc_stair) {
            std::string input = read_file(points_file);
            std::string key = std::string(kVersion) + "\nstaircase\n" + order_spec + "\nsvg:" +
                              (svg_out.empty() ? "0" : "1") + "\n" + input;
            Payload p = cached(key, !no_cache,
                               [&] { return run_staircase(input, order_spec, !svg_out.empty()); });
            deliver(p, svg_out);
        } else if (*sc_spoly) {
            std::string input = read_file(poly_file);
            std::vector<Rat> schedule = parse_schedule(schedule_str);
            std::string witness_input = witness_file.empty() ? "" : read_file(witness_file);
            std::string key = std::string(kVersion) + "\nspoly\n" + schedule_str + "\n" + format +
                              "\nsvg:" + (svg_out.empty() ? "0" : "1") + "\n" + witness_input +
                              "\n" + input;
            Payload p = cached(key, !no_cache, [&] {
                return run_spoly(input, schedule, witness_input, format, !svg_out.empty());
            });
            deliver(p, svg_out);
        } else if (*sc_sesh) {
            Payload p = run_seshadri(wa, wb, wc, parse_schedule(schedule_str), sesh_format);
            deliver(p, "");
        } else if (*sc_atlas) {
            bool ignored = false;
            std::string key = std::string(kVersion) + "\natlas\n" +
                              std::to_string(max_two_vol) + "\n" + atlas_format;
            Payload p = cached(key, !no_cache,
                               [&] { return run_atlas(max_two_vol, atlas_format, &ignored); });
            // derive the flag from the payload so cache hits behave identically
            bool any_inconclusive =
                atlas_format == "json"
                    ? p.out.find("\"inconclusive\": []") == std::string::npos
                    : p.out.find("# inconclusive:") != std::string::npos;
            if (atlas_out.empty())
                deliver(p, "");
            else
                write_file(atlas_out, p.out);
            if (strict && any_inconclusive)
                return 3;
        } else if (*sc_pr) {
            PrReport rep = verify_pr(family_r);
            std::string out;
            for (const auto& c : rep.checks)
                out += std::string(c.ok ? "pass" : "FAIL") + "  " + c.name +
                       (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
            out += rep.ok ? "ok\n" : "failed\n";
            std::fwrite(out.data(), 1, out.size(), stdout);
            if (!rep.ok)
                return 1;
        } else if (*sc_check) {
            CheckSummary sum = run_property_suite(seed);
            std::string out;
            for (const auto& v : sum.violations)
                out += "violation  " + v.check + "  " + v.detail + "\n";
            out += std::to_string(sum.checks_run) + " checks, " +
                   std::to_string(sum.violations.size()) + " violations\n";
            std::fwrite(out.data(), 1, out.size(), stdout);
            if (!sum.ok())
                return 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
