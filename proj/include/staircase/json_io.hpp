#pragma once

#include <string>

#include <json.hpp>

#include "staircase/atlas.hpp"
#include "staircase/engine.hpp"
#include "staircase/geometry.hpp"
#include "staircase/spolytope.hpp"

namespace stair {

using nlohmann::json;

// {"n":2,"points":[[x,y],...]}
PointSet pointset_from_json(const json& j);
json pointset_to_json(const PointSet& a);

// {"n":2,"terms":[{"p":[x,y],"c":"num/den"},...]}
FiniteFn finitefn_from_json(const json& j);
json finitefn_to_json(const FiniteFn& f);

// {"vertices":[["num/den","num/den"],...]}; integers are accepted too
RatPolygon ratpolygon_from_json(const json& j);
json ratpolygon_to_json(const RatPolygon& p);
json latticepolygon_to_json(const LatticePolygon& p);

json staircase_to_json(const Staircase& e);
json dilate_report_to_json(const DilateReport& rep);
json bracket_to_json(const SPBracket& br);
json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);
json pr_report_to_json(const PrReport& rep);

std::string atlas_to_csv(const AtlasResult& res);
json atlas_to_json(const AtlasResult& res);

std::string corners_str(const LatticePolygon& p); // "(0,0),(1,0),(2,3)"

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace stair
