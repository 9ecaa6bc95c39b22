#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arclabel/area.hpp"
#include "arclabel/labeler.hpp"

namespace arclabel {

struct AreaRecord {
  std::string id;
  std::string name;
  AreaShape shape;
};

struct Dataset {
  std::vector<AreaRecord> areas;
  std::string source;

  std::size_t node_count() const;
};

struct GeoJsonOptions {
  std::string name_key = "name";
};

/// Reads a FeatureCollection (or a single Feature). Every Polygon becomes
/// one area and every MultiPolygon one area per part, with ids "<feature
/// id>/<part>". The feature id is its "id" member, else its index.
/// Closing and consecutive duplicate vertices are dropped. Other geometry
/// types are skipped. Throws ParseError on malformed JSON or GeoJSON and
/// ValidationError (naming feature and ring) on invalid polygons.
Dataset read_geojson(std::string_view text, const GeoJsonOptions& options = {});
Dataset read_geojson_file(const std::filesystem::path& path, const GeoJsonOptions& options = {});

/// Splits every boundary edge longer than `max_edge` into ceil(len /
/// max_edge) equal parts. Original vertices are kept bit-exactly.
AreaShape densify_boundary(const AreaShape& area, double max_edge);

/// 1/200 of the bounding-box diagonal.
double default_max_edge(const AreaShape& area);

/// One area's outcome as written to and read back from results JSON.
struct ResultRecord {
  std::string id;
  std::string name;
  std::optional<Placement> placement;
  std::optional<NoFitReason> reason;
};

std::vector<ResultRecord> make_records(const Dataset& dataset,
                                       std::span<const LabelResult> results);

/// {"areas": [{id, name, status, circle {cx, cy, r}, center_angle,
/// extent, L, H, binding}, ...]}; failed areas carry status "nofit" and a
/// reason instead of geometry. Doubles are written so that they read back
/// bit-exactly.
std::string write_results_json(std::span<const ResultRecord> records);
std::vector<ResultRecord> read_results_json(std::string_view text);

struct SvgOptions {
  double width_px = 1200.0;
  bool draw_support_circles = false;
};

/// Areas, baseline arcs, label bands and one text-on-path element per
/// labelled area. Map y points up; the drawing flips it.
std::string write_svg(const Dataset& dataset, std::span<const ResultRecord> records,
                      const SvgOptions& options = {});

/// True when text along the arc would run clockwise on the map: the
/// upright reading direction unless the label sits on the lower half of
/// its circle.
bool text_runs_clockwise(const Placement& placement);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace arclabel
