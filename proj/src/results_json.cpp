#include <json.hpp>

#include "arclabel/errors.hpp"
#include "arclabel/io.hpp"

namespace arclabel {
namespace {

using nlohmann::json;

Binding parse_binding(const std::string& s) {
  if (s == "cap") return Binding::cap;
  if (s == "wedge") return Binding::wedge;
  if (s == "interval_end") return Binding::interval_end;
  throw ParseError("unknown binding '" + s + "'", 0, 0, 0);
}

NoFitReason parse_reason(const std::string& s) {
  for (const NoFitReason r : {NoFitReason::empty_skeleton, NoFitReason::degenerate_input,
                              NoFitReason::no_paths, NoFitReason::no_placement,
                              NoFitReason::below_min_height}) {
    if (to_string(r) == s) return r;
  }
  throw ParseError("unknown nofit reason '" + s + "'", 0, 0, 0);
}

}  // namespace

std::vector<ResultRecord> make_records(const Dataset& dataset,
                                       std::span<const LabelResult> results) {
  if (results.size() != dataset.areas.size()) {
    throw std::invalid_argument("one result per area expected");
  }
  std::vector<ResultRecord> records;
  records.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    records.push_back({dataset.areas[i].id, dataset.areas[i].name, results[i].best,
                       results[i].reason});
  }
  return records;
}

std::string write_results_json(std::span<const ResultRecord> records) {
  json areas = json::array();
  for (const ResultRecord& r : records) {
    json a = {{"id", r.id}, {"name", r.name}};
    if (r.placement) {
      const Placement& p = *r.placement;
      a["status"] = "labeled";
      a["circle"] = {{"cx", p.circle.center.x}, {"cy", p.circle.center.y}, {"r", p.circle.radius}};
      a["center_angle"] = p.center_angle;
      a["extent"] = p.extent;
      a["L"] = p.length;
      a["H"] = p.height;
      a["binding"] = std::string(to_string(p.binding));
    } else {
      a["status"] = "nofit";
      a["reason"] = std::string(to_string(r.reason.value_or(NoFitReason::no_placement)));
    }
    areas.push_back(std::move(a));
  }
  return json{{"areas", std::move(areas)}}.dump(2) + "\n";
}

std::vector<ResultRecord> read_results_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, 0, e.byte);
  }
  std::vector<ResultRecord> records;
  try {
    for (const json& a : doc.at("areas")) {
      ResultRecord r;
      r.id = a.at("id").get<std::string>();
      r.name = a.at("name").get<std::string>();
      if (a.at("status").get<std::string>() == "labeled") {
        Placement p;
        const json& c = a.at("circle");
        p.circle = {{c.at("cx").get<double>(), c.at("cy").get<double>()}, c.at("r").get<double>()};
        p.center_angle = a.at("center_angle").get<double>();
        p.extent = a.at("extent").get<double>();
        p.length = a.at("L").get<double>();
        p.height = a.at("H").get<double>();
        p.binding = parse_binding(a.at("binding").get<std::string>());
        r.placement = p;
      } else {
        r.reason = parse_reason(a.at("reason").get<std::string>());
      }
      records.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed results: ") + e.what(), 0, 0, 0);
  }
  return records;
}

}  // namespace arclabel
