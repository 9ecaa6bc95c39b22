#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arclabel/errors.hpp"
#include "arclabel/io.hpp"

namespace arclabel {
namespace {

using nlohmann::json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position locate(std::string_view text, std::size_t offset) {
  Position pos;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError("malformed GeoJSON: " + what, 0, 0, 0);
}

std::vector<Point> read_ring(const json& coords, const std::string& where) {
  if (!coords.is_array()) malformed(where + ": ring is not an array");
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const json& c : coords) {
    if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number()) {
      malformed(where + ": position is not [x, y]");
    }
    const Point p{c[0].get<double>(), c[1].get<double>()};
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  }
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  return pts;
}

AreaShape read_polygon(const json& rings, const std::string& where) {
  if (!rings.is_array() || rings.empty()) malformed(where + ": polygon has no rings");
  std::string ring_name = "outer";
  try {
    Ring outer(read_ring(rings[0], where));
    std::vector<Ring> holes;
    for (std::size_t h = 1; h < rings.size(); ++h) {
      ring_name = "hole " + std::to_string(h - 1);
      holes.emplace_back(read_ring(rings[h], where));
    }
    ring_name.clear();
    return AreaShape(std::move(outer), std::move(holes));
  } catch (const ValidationError& e) {
    const std::string prefix = ring_name.empty() ? where : where + " " + ring_name;
    throw ValidationError(prefix + ": " + e.what());
  }
}

std::string feature_id(const json& feature, std::size_t index) {
  const auto it = feature.find("id");
  if (it != feature.end()) {
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number()) return it->dump();
  }
  return std::to_string(index);
}

std::string feature_name(const json& feature, const std::string& key) {
  const auto props = feature.find("properties");
  if (props == feature.end() || !props->is_object()) return {};
  const auto it = props->find(key);
  if (it == props->end() || it->is_null()) return {};
  return it->is_string() ? it->get<std::string>() : it->dump();
}

void read_feature(const json& feature, std::size_t index, const GeoJsonOptions& options,
                  Dataset& out) {
  if (!feature.is_object()) malformed("feature " + std::to_string(index) + " is not an object");
  const auto geometry = feature.find("geometry");
  if (geometry == feature.end() || geometry->is_null()) return;
  const std::string id = feature_id(feature, index);
  const std::string name = feature_name(feature, options.name_key);
  const std::string type = geometry->value("type", "");
  const auto coords = geometry->find("coordinates");
  if (type != "Polygon" && type != "MultiPolygon") return;
  if (coords == geometry->end()) malformed("feature " + id + " has no coordinates");

  if (type == "Polygon") {
    out.areas.push_back({id, name, read_polygon(*coords, "feature " + id)});
    return;
  }
  if (!coords->is_array()) malformed("feature " + id + ": MultiPolygon is not an array");
  for (std::size_t part = 0; part < coords->size(); ++part) {
    const std::string part_id = id + "/" + std::to_string(part);
    out.areas.push_back({part_id, name, read_polygon((*coords)[part], "feature " + part_id)});
  }
}

}  // namespace

std::size_t Dataset::node_count() const {
  std::size_t n = 0;
  for (const AreaRecord& a : areas) n += a.shape.vertex_count();
  return n;
}

Dataset read_geojson(std::string_view text, const GeoJsonOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const Position pos = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), pos.line, pos.column, e.byte);
  }
  if (!doc.is_object()) malformed("top level is not an object");

  Dataset out;
  const std::string type = doc.value("type", "");
  if (type == "FeatureCollection") {
    const auto features = doc.find("features");
    if (features == doc.end() || !features->is_array()) malformed("missing features array");
    for (std::size_t i = 0; i < features->size(); ++i) {
      read_feature((*features)[i], i, options, out);
    }
  } else if (type == "Feature") {
    read_feature(doc, 0, options, out);
  } else {
    malformed("expected a FeatureCollection or Feature, got '" + type + "'");
  }
  return out;
}

Dataset read_geojson_file(const std::filesystem::path& path, const GeoJsonOptions& options) {
  Dataset out = read_geojson(read_text_file(path), options);
  out.source = path.string();
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace arclabel
