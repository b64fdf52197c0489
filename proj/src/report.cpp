#include "twopoint/report.hpp"

#include <cstdio>

namespace twopoint {

namespace {

std::string num(double v) {
  // same spelling as the JSON writer
  return Json(v).dump();
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j;
  j["bound"] = r.bound_name;
  j["n"] = r.n;
  j["p"] = r.p.to_string();
  j["nodes"] = Json::array({r.nodes.y, r.nodes.x, r.nodes.z});
  j["interval"] = Json::array({r.iv.a(), r.iv.b()});
  j["value"] = r.bound_value;
  j["remainder"] = r.remainder_abs;
  j["satisfied"] = r.satisfied;
  j["tightness"] = r.tightness;
  j["h_estimated"] = r.h_estimated;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  try {
    BoundReport r;
    r.bound_name = j.at("bound").get<std::string>();
    r.n = j.at("n").get<int>();
    r.p = NormSpec::parse(j.at("p").get<std::string>());
    const auto& nd = j.at("nodes");
    r.nodes = NodeTriple{nd.at(0).get<double>(), nd.at(1).get<double>(), nd.at(2).get<double>()};
    const auto& iv = j.at("interval");
    r.iv = Interval(iv.at(0).get<double>(), iv.at(1).get<double>());
    r.bound_value = j.at("value").get<double>();
    r.remainder_abs = j.at("remainder").get<double>();
    r.satisfied = j.at("satisfied").get<bool>();
    r.tightness = j.at("tightness").get<double>();
    r.h_estimated = j.at("h_estimated").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed bound report: ") + e.what());
  }
}

std::string csv_header() { return "bound,n,p,nodes,interval,value,remainder,satisfied,tightness,h_estimated"; }

std::string to_csv_row(const BoundReport& r) {
  std::string row = r.bound_name;
  row += "," + std::to_string(r.n);
  row += "," + r.p.to_string();
  row += "," + num(r.nodes.y) + ";" + num(r.nodes.x) + ";" + num(r.nodes.z);
  row += "," + num(r.iv.a()) + ";" + num(r.iv.b());
  row += "," + num(r.bound_value);
  row += "," + num(r.remainder_abs);
  row += r.satisfied ? ",true" : ",false";
  row += "," + num(r.tightness);
  row += r.h_estimated ? ",true" : ",false";
  return row;
}

std::string dump_json(const Json& j) { return j.dump(); }

std::string reemit_json(const std::string& text) { return dump_json(Json::parse(text)); }

}  // namespace twopoint
