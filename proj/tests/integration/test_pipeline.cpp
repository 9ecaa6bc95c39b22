#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <random>

#include "arclabel/bench.hpp"
#include "arclabel/io.hpp"
#include "arclabel/labeler.hpp"
#include "oracles.hpp"

using namespace arclabel;
namespace fs = std::filesystem;

namespace {

nlohmann::json polygon_feature(const std::string& name, const AreaShape& shape) {
  nlohmann::json rings = nlohmann::json::array();
  const auto ring_json = [](const Ring& r) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Point& p : r.vertices()) coords.push_back({p.x, p.y});
    coords.push_back({r[0].x, r[0].y});
    return coords;
  };
  rings.push_back(ring_json(shape.outer()));
  for (const Ring& h : shape.holes()) rings.push_back(ring_json(h));
  return {{"type", "Feature"},
          {"properties", {{"name", name}}},
          {"geometry", {{"type", "Polygon"}, {"coordinates", rings}}}};
}

std::string fixture_geojson() {
  std::mt19937_64 rng(41);
  nlohmann::json features = nlohmann::json::array();
  features.push_back(polygon_feature("Rectangle", oracle::rectangle(10, 1, 10)));
  features.push_back(polygon_feature("Sector", oracle::annulus_sector(6, 10, 1.5 * kPi, 1.0)));
  for (int i = 0; i < 4; ++i) {
    features.push_back(polygon_feature("Blob " + std::to_string(i), oracle::random_area(rng, 15, i == 1, 100)));
  }
  features.push_back(polygon_feature("Sliver", AreaShape(Ring({{0, 0}, {1, 0}, {0.5, 1e-3}}))));
  return nlohmann::json{{"type", "FeatureCollection"}, {"features", features}}.dump();
}

std::string label_to_json(const Dataset& data, bool parallel) {
  std::vector<AreaShape> shapes;
  for (const AreaRecord& a : data.areas) shapes.push_back(a.shape);
  return write_results_json(make_records(data, label_all(shapes, LabelerConfig{}, parallel)));
}

Dataset densified(const Dataset& raw) {
  Dataset d = raw;
  for (AreaRecord& a : d.areas) a.shape = densify_boundary(a.shape, default_max_edge(a.shape));
  return d;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ARCLABEL_CLI) + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("pipeline from GeoJSON text to results and SVG") {
  const Dataset data = densified(read_geojson(fixture_geojson()));
  REQUIRE(data.areas.size() == 7);
  const std::string json = label_to_json(data, false);
  const auto records = read_results_json(json);
  REQUIRE(records.size() == 7);
  std::size_t labeled = 0;
  for (const auto& r : records) labeled += r.placement ? 1 : 0;
  // Densifying the sliver gives it a skeleton, so it gets a tiny label too.
  CHECK(labeled == 7);
  REQUIRE(records.back().placement);
  CHECK(records.back().placement->height < 1e-3);
  const std::string svg = write_svg(data, records);
  std::size_t paths = 0;
  for (auto at = svg.find("<textPath"); at != std::string::npos; at = svg.find("<textPath", at + 1)) ++paths;
  CHECK(paths == labeled);
}

TEST_CASE("repeated and threaded runs give identical JSON") {
  const Dataset data = densified(read_geojson(fixture_geojson()));
  const std::string a = label_to_json(data, false);
  CHECK(label_to_json(data, false) == a);
  CHECK(label_to_json(data, true) == a);
}

TEST_CASE("command-line tool") {
  const fs::path dir = fs::temp_directory_path() / "arclabel_cli_test";
  fs::create_directories(dir);
  const fs::path input = dir / "in.geojson";
  write_text_file(input, fixture_geojson());

  const std::string out = "--out-json " + (dir / "out.json").string() + " --out-svg " +
                          (dir / "out.svg").string() + " --bench-csv " + (dir / "bench.csv").string();
  REQUIRE(run_cli("--input " + input.string() + " " + out) == 0);
  const auto records = read_results_json(read_text_file(dir / "out.json"));
  CHECK(records.size() == 7);
  CHECK(read_text_file(dir / "out.svg").find("<textPath") != std::string::npos);
  CHECK(read_text_file(dir / "bench.csv").rfind("area_id,nodes,t_medial_axis,t_paths,t_placement", 0) == 0);

  // Same results through the library and through the tool.
  const Dataset data = densified(read_geojson(fixture_geojson()));
  CHECK(read_text_file(dir / "out.json") == label_to_json(data, false));

  REQUIRE(run_cli("--input " + input.string() + " --parallel true --band full --out-json " +
                  (dir / "full.json").string()) == 0);
  CHECK(read_results_json(read_text_file(dir / "full.json")).size() == 7);

  write_text_file(dir / "bad.geojson", "{\"type\": \"FeatureCollection\", \"features\": [");
  CHECK(run_cli("--input " + (dir / "bad.geojson").string()) != 0);
  CHECK(run_cli("--input " + (dir / "missing.geojson").string()) != 0);
  CHECK(run_cli("--input " + input.string() + " --aspect -1") != 0);
  fs::remove_all(dir);
}

TEST_CASE("per-node time stays within 10x across sizes from 1e3 to 1e5 nodes") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Dataset data;
  for (int i = 0; i < 100; ++i) {
    const double target = std::pow(10.0, 3.0 + 2.0 * i / 99.0);
    const std::vector<Point> star = oracle::random_star(rng, 40, {0, 0}, 6.0, 10.0);
    double perimeter = 0.0;
    for (std::size_t k = 0; k < star.size(); ++k) perimeter += distance(star[k], star[(k + 1) % star.size()]);
    const AreaShape shape(Ring(oracle::densify_ring(star, perimeter / target)));
    data.areas.push_back({std::to_string(i), "P" + std::to_string(i), shape});
  }
  const BenchReport report = run_benchmark(data, LabelerConfig{});
  std::size_t nodes_min = SIZE_MAX, nodes_max = 0;
  for (const BenchRow& r : report.rows) {
    nodes_min = std::min(nodes_min, r.nodes);
    nodes_max = std::max(nodes_max, r.nodes);
  }
  MESSAGE(bench_table(report));
  CHECK(nodes_min >= 1000);
  CHECK(nodes_max <= 100000 + 40);
  CHECK(report.aggregated_rows == 100);
  for (std::size_t ph = 0; ph < 3; ++ph) {
    CHECK(report.phases[ph].spread <= 10.0);
  }
}
