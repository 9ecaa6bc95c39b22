// Command-line front end: label every area of a GeoJSON file.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arclabel/bench.hpp"
#include "arclabel/errors.hpp"
#include "arclabel/io.hpp"
#include "arclabel/labeler.hpp"
#include "arclabel/skeleton.hpp"

namespace {

using namespace arclabel;

struct Options {
  std::string input;
  std::string name_key = "name";
  double aspect = 0.18;
  std::size_t k = 8;
  double max_extent = kPi / 3.0;
  double min_height = 0.0;
  double densify = -1.0;
  std::string out_json;
  std::string out_svg;
  std::string bench_csv;
  std::string dump_skeleton;
  std::string band = "centered";
  bool parallel = false;
};

Dataset prepare(const Options& opt) {
  GeoJsonOptions gj;
  gj.name_key = opt.name_key;
  Dataset data = read_geojson_file(opt.input, gj);
  if (opt.densify == 0.0) return data;
  for (AreaRecord& a : data.areas) {
    const double max_edge = opt.densify > 0.0 ? opt.densify : default_max_edge(a.shape);
    a.shape = densify_boundary(a.shape, max_edge);
  }
  return data;
}

void dump_skeletons(const Dataset& data, const std::string& path) {
  nlohmann::json features = nlohmann::json::array();
  for (const AreaRecord& a : data.areas) {
    try {
      nlohmann::json f = nlohmann::json::parse(skeleton_to_geojson(build_skeleton(a.shape)));
      f["properties"]["id"] = a.id;
      features.push_back(std::move(f));
    } catch (const Error&) {
      // Areas without a skeleton are simply absent from the dump.
    }
  }
  write_text_file(path, nlohmann::json{{"type", "FeatureCollection"}, {"features", features}}.dump());
}

int run(const Options& opt) {
  const Dataset data = prepare(opt);

  LabelerConfig config;
  config.aspect = opt.aspect;
  config.k = opt.k;
  config.placement.max_extent = opt.max_extent;
  config.placement.min_height = opt.min_height;
  config.placement.reach = opt.band == "full" ? BandReach::full : BandReach::centered;

  std::vector<LabelResult> results;
  if (!opt.bench_csv.empty()) {
    BenchReport report = run_benchmark(data, config);
    write_text_file(opt.bench_csv, bench_csv(report));
    std::cout << bench_table(report);
    results = std::move(report.results);
  } else {
    std::vector<AreaShape> shapes;
    shapes.reserve(data.areas.size());
    for (const AreaRecord& a : data.areas) shapes.push_back(a.shape);
    results = label_all(shapes, config, opt.parallel);
  }

  const std::vector<ResultRecord> records = make_records(data, results);
  std::size_t labeled = 0;
  for (const ResultRecord& r : records) labeled += r.placement ? 1 : 0;
  std::cout << "labelled " << labeled << " of " << records.size() << " areas ("
            << data.node_count() << " nodes)\n";

  if (!opt.out_json.empty()) write_text_file(opt.out_json, write_results_json(records));
  if (!opt.out_svg.empty()) write_text_file(opt.out_svg, write_svg(data, records));
  if (!opt.dump_skeleton.empty()) dump_skeletons(data, opt.dump_skeleton);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Curved area labels along circular arcs"};
  app.add_option("--input", opt.input, "GeoJSON FeatureCollection of polygons")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--name-key", opt.name_key, "Feature property holding the label text")
      ->capture_default_str();
  app.add_option("--aspect", opt.aspect, "Label height / length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--k", opt.k, "Candidate paths per area")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}))
      ->capture_default_str();
  app.add_option("--max-extent", opt.max_extent, "Largest angular extent in radians")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--min-height", opt.min_height, "Drop labels lower than this (map units)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--densify", opt.densify,
                 "Longest boundary edge; 0 disables, default 1/200 of each area's diagonal");
  app.add_option("--out-json", opt.out_json, "Write results JSON");
  app.add_option("--out-svg", opt.out_svg, "Write an SVG rendering");
  app.add_option("--bench-csv", opt.bench_csv,
                 "Run the sequential benchmark and write per-area phase times");
  app.add_option("--parallel", opt.parallel, "Label areas on several threads")
      ->capture_default_str();
  app.add_option("--band", opt.band, "Radial reach used for blocking segments")
      ->check(CLI::IsMember({"centered", "full"}))
      ->capture_default_str();
  app.add_option("--dump-skeleton", opt.dump_skeleton, "Write skeleton edges as GeoJSON");
  CLI11_PARSE(app, argc, argv);

  try {
    return run(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
