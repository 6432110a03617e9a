#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clustcmp/baselines.hpp"
#include "clustcmp/clusters_io.hpp"
#include "clustcmp/experiment.hpp"
#include "clustcmp/format.hpp"
#include "clustcmp/generators.hpp"
#include "clustcmp/graph.hpp"
#include "clustcmp/rng.hpp"
#include "clustcmp/similarity.hpp"

namespace {

using clustcmp::Clustering;
using clustcmp::Error;
using clustcmp::Measure;
using clustcmp::Scenario;

constexpr int kExitInputError = 2;
constexpr int kExitUniverseMismatch = 3;

// Doubles rounded to 12 significant digits before they enter JSON, so the
// serializer prints exactly the documented precision.
double rounded(double value) { return std::stod(clustcmp::format_value(value)); }

std::vector<Measure> parse_measures(const std::string& spec) {
  std::vector<Measure> measures;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto m = clustcmp::parse_measure(item);
    if (!m) {
      throw Error(clustcmp::errc::invalid_argument, "unknown measure '" + item + "'");
    }
    measures.push_back(*m);
  }
  if (measures.empty()) {
    throw Error(clustcmp::errc::invalid_argument, "no measures requested");
  }
  return measures;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(value);
    } catch (const std::exception&) {
      throw Error(clustcmp::errc::invalid_argument, "bad grid value '" + item + "'");
    }
  }
  if (grid.empty()) {
    throw Error(clustcmp::errc::invalid_argument, "empty parameter grid");
  }
  return grid;
}

std::vector<std::int64_t> parse_sizes(const std::string& spec) {
  std::vector<std::int64_t> sizes;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(clustcmp::errc::invalid_argument, "bad size '" + item + "'");
    }
  }
  return sizes;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) {
    throw Error(clustcmp::errc::parse_error, path + ": cannot open for writing");
  }
  return file;
}

struct CompareOptions {
  std::string file_a, file_b;
  std::optional<std::int64_t> n_override;
  std::string measures = "fstar_wo";
  bool per_cluster = false;
  std::string format = "json";
  std::string out;
};

int cmd_compare(const CompareOptions& opt) {
  const Clustering a = clustcmp::read_clusters_file(opt.file_a, opt.n_override);
  const Clustering b = clustcmp::read_clusters_file(opt.file_b, opt.n_override);
  const std::vector<Measure> measures = parse_measures(opt.measures);

  const auto outlier_a = clustcmp::outliers(a).size();
  const auto outlier_b = clustcmp::outliers(b).size();
  for (Measure m : measures) {
    const bool baseline = m == Measure::omega || m == Measure::onmi_lfk || m == Measure::onmi_mgh;
    if (baseline && (outlier_a > 0 || outlier_b > 0)) {
      std::cerr << "warning: " << clustcmp::measure_name(m)
                << " has no outlier semantics; outliers are treated as objects in zero clusters\n";
      break;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> values;
  for (Measure m : measures) {
    values.emplace_back(clustcmp::measure_name(m), clustcmp::evaluate_measure(m, a, b));
  }
  std::optional<clustcmp::MatchReport> report;
  if (opt.per_cluster) report = clustcmp::match_report(a, b);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["file_a"] = opt.file_a;
    doc["file_b"] = opt.file_b;
    doc["n"] = a.num_objects();
    doc["clusters"] = {{"a", a.size()}, {"b", b.size()}};
    doc["outliers"] = {{"a", outlier_a}, {"b", outlier_b}};
    nlohmann::ordered_json measures_json;
    for (const auto& [name, value] : values) measures_json[name] = rounded(value);
    doc["measures"] = std::move(measures_json);
    if (report) {
      auto records = [](const std::vector<clustcmp::MatchRecord>& direction) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < direction.size(); ++i) {
          nlohmann::ordered_json row;
          row["cluster"] = i;
          row["weight"] = rounded(direction[i].weight);
          if (direction[i].match) {
            row["match"] = *direction[i].match;
          } else {
            row["match"] = nullptr;
          }
          row["fstar"] = rounded(direction[i].fstar);
          list.push_back(std::move(row));
        }
        return list;
      };
      doc["per_cluster"] = {{"first_to_second", records(report->first_to_second)},
                            {"second_to_first", records(report->second_to_first)},
                            {"outlier_jaccard", rounded(report->outlier_jaccard)}};
    }
    doc["wall_time_ms"] = rounded(elapsed.count());
    out << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "measure,value\n";
    for (const auto& [name, value] : values) {
      out << name << ',' << clustcmp::format_value(value) << "\n";
    }
    if (report) {
      out << "direction,cluster,size,weight,match,fstar\n";
      auto rows = [&](char tag, const Clustering& c,
                      const std::vector<clustcmp::MatchRecord>& direction) {
        for (std::size_t i = 0; i < direction.size(); ++i) {
          out << tag << ',' << i << ',' << c.cluster(i).size() << ','
              << clustcmp::format_value(direction[i].weight) << ',';
          if (direction[i].match) out << *direction[i].match;
          out << ',' << clustcmp::format_value(direction[i].fstar) << "\n";
        }
      };
      rows('a', a, report->first_to_second);
      rows('b', b, report->second_to_first);
      out << "outliers,,,,," << clustcmp::format_value(report->outlier_jaccard) << "\n";
    }
  } else {
    throw Error(clustcmp::errc::invalid_argument, "unknown format '" + opt.format + "'");
  }
  return 0;
}

struct ExperimentOptions {
  std::string scenario;
  std::string grid;
  int reps = 100;
  std::uint64_t seed = 1;
  std::string measures = "fstar_wo";
  std::string sizes;
  double ref_eta = -1.0;
  std::string out;
  std::string agg_out;
};

int cmd_experiment(const ExperimentOptions& opt) {
  clustcmp::ExperimentSpec spec;
  const auto scenario = clustcmp::parse_scenario(opt.scenario);
  if (!scenario) {
    throw Error(clustcmp::errc::invalid_argument, "unknown scenario '" + opt.scenario + "'");
  }
  spec.scenario = *scenario;
  spec.grid = opt.grid.empty() ? clustcmp::default_grid(spec.scenario) : parse_grid(opt.grid);
  spec.reps = opt.reps;
  spec.seed = opt.seed;
  spec.measures = parse_measures(opt.measures);
  if (!opt.sizes.empty()) spec.sizes = parse_sizes(opt.sizes);
  if (opt.ref_eta >= 0.0) spec.reference_eta = opt.ref_eta;

  const auto rows = clustcmp::run_experiment(spec);

  std::ofstream raw_file;
  std::ostream& raw = open_output(raw_file, opt.out);
  clustcmp::write_raw_csv(raw, spec, rows);

  std::string agg_path = opt.agg_out;
  if (agg_path.empty() && !opt.out.empty()) {
    std::filesystem::path p(opt.out);
    const std::string stem = p.stem().string();
    p.replace_filename(stem + "_agg" + p.extension().string());
    agg_path = p.string();
  }
  if (!agg_path.empty()) {
    std::ofstream agg_file;
    std::ostream& agg = open_output(agg_file, agg_path);
    clustcmp::write_aggregate_csv(agg, spec, rows);
  }
  return 0;
}

struct GenerateOptions {
  std::string scenario;
  double fraction = 0.0;
  std::int64_t steps = 0;
  std::int64_t k = 8;
  double eta = 3.0;
  double ref_eta = -1.0;
  std::string sizes;
  std::uint64_t seed = 1;
  std::string out = "pair";
};

int cmd_generate(const GenerateOptions& opt) {
  const auto scenario = clustcmp::parse_scenario(opt.scenario);
  if (!scenario) {
    throw Error(clustcmp::errc::invalid_argument, "unknown scenario '" + opt.scenario + "'");
  }
  clustcmp::Rng rng(opt.seed);
  clustcmp::ScenarioPair pair;
  switch (*scenario) {
    case Scenario::shuffle:
      pair = clustcmp::scenario_shuffle(opt.fraction, rng);
      break;
    case Scenario::skew:
      pair = clustcmp::scenario_skew(opt.steps, rng);
      break;
    case Scenario::kclusters:
      pair = clustcmp::scenario_kclusters(opt.k, rng);
      break;
    case Scenario::overlap:
    case Scenario::outliers: {
      std::vector<std::int64_t> sizes =
          opt.sizes.empty() ? std::vector<std::int64_t>(32, 32) : parse_sizes(opt.sizes);
      const double ref =
          opt.ref_eta >= 0.0 ? opt.ref_eta : (*scenario == Scenario::outliers ? 0.5 : 3.0);
      const clustcmp::GeometricLayer layer = clustcmp::build_layer(sizes, rng);
      pair.first = clustcmp::geometric_clustering(layer, opt.eta);
      pair.second = clustcmp::geometric_clustering(layer, ref);
      break;
    }
  }
  const std::string path_a = opt.out + ".a.clusters";
  const std::string path_b = opt.out + ".b.clusters";
  clustcmp::write_clusters_file(path_a, pair.first);
  clustcmp::write_clusters_file(path_b, pair.second);
  std::cerr << "wrote " << path_a << " and " << path_b << "\n";
  return 0;
}

struct InduceOptions {
  std::string graph_file;
  std::string clusters_file;
  std::optional<std::int64_t> n_override;
  bool from_edges = false;
  bool closure = false;
  std::string out;
};

int cmd_induce(const InduceOptions& opt) {
  const clustcmp::Graph g = clustcmp::read_edge_list_file(opt.graph_file, opt.n_override);

  clustcmp::InducedClustering induced;
  if (opt.from_edges) {
    // Input is an edge clustering; the useful transformation is its closure.
    const Clustering e = clustcmp::read_clusters_file(opt.clusters_file);
    induced = clustcmp::edge_closure(g, e);
  } else {
    const Clustering c = clustcmp::read_clusters_file(opt.clusters_file);
    induced = clustcmp::induce_edge_clustering(g, c);
    if (opt.closure) {
      induced = clustcmp::edge_closure(g, induced.clustering);
    }
  }

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out);
  clustcmp::write_clusters(out, induced.clustering);
  if (!opt.out.empty()) {
    std::ofstream map_file(opt.out + ".map.csv", std::ios::binary);
    clustcmp::write_edge_map_csv(map_file, g);
  }

  const auto edge_outliers = clustcmp::outliers(induced.clustering).size();
  std::cerr << "edge clusters: " << induced.clustering.size()
            << ", edge outliers: " << edge_outliers
            << ", dropped empty induced sets: " << induced.dropped_empty
            << ", collapsed duplicate induced sets: " << induced.collapsed_duplicates << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare clusterings with overlaps and outliers"};
  app.require_subcommand(1);

  CompareOptions compare_opt;
  std::int64_t compare_n = -1;
  auto* compare = app.add_subcommand("compare", "compare two clustering files");
  compare->add_option("file_a", compare_opt.file_a, "first .clusters file")->required();
  compare->add_option("file_b", compare_opt.file_b, "second .clusters file")->required();
  compare->add_option("--n", compare_n, "universe size override (wins over #n= headers)")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--measures", compare_opt.measures,
                      "comma list: fstar_wo,fstar_w,fstar_wo_ab,fstar_wo_ba,fstar_w_ab,"
                      "fstar_w_ba,omega,onmi_lfk,onmi_mgh");
  compare->add_flag("--per-cluster", compare_opt.per_cluster, "emit per-cluster match records");
  compare->add_option("--format", compare_opt.format, "json or csv (default json)");
  compare->add_option("--out", compare_opt.out, "output path (default stdout)");

  ExperimentOptions exp_opt;
  auto* experiment = app.add_subcommand("experiment", "run a seeded scenario sweep");
  experiment->add_option("--scenario", exp_opt.scenario,
                         "shuffle|skew|kclusters|overlap|outliers")->required();
  experiment->add_option("--grid", exp_opt.grid, "comma list of parameter values");
  experiment->add_option("--reps", exp_opt.reps, "repetitions per grid point (default 100)")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp_opt.seed, "master seed (default 1)");
  experiment->add_option("--measures", exp_opt.measures, "comma list (default fstar_wo)");
  experiment->add_option("--sizes", exp_opt.sizes, "geometric part sizes, comma list");
  experiment->add_option("--ref-eta", exp_opt.ref_eta, "reference eta for overlap/outliers");
  experiment->add_option("--out", exp_opt.out, "raw CSV path (default stdout)");
  experiment->add_option("--agg-out", exp_opt.agg_out,
                         "aggregate CSV path (default <out>_agg.csv)");

  GenerateOptions gen_opt;
  auto* generate = app.add_subcommand("generate", "write a scenario clustering pair");
  generate->add_option("--scenario", gen_opt.scenario,
                       "shuffle|skew|kclusters|overlap|outliers")->required();
  generate->add_option("--fraction", gen_opt.fraction, "shuffle fraction in [0,1]");
  generate->add_option("--steps", gen_opt.steps, "skew reassignment steps");
  generate->add_option("--k", gen_opt.k, "kclusters cluster count (divides 1024)");
  generate->add_option("--eta", gen_opt.eta, "geometric expansion factor");
  generate->add_option("--ref-eta", gen_opt.ref_eta, "reference eta (default 3 / 0.5)");
  generate->add_option("--sizes", gen_opt.sizes, "geometric part sizes, comma list");
  generate->add_option("--seed", gen_opt.seed, "seed (default 1)");
  generate->add_option("--out", gen_opt.out, "output prefix (writes <out>.a/.b.clusters)");

  InduceOptions ind_opt;
  std::int64_t induce_n = -1;
  auto* induce = app.add_subcommand("induce", "induce an edge clustering from a graph");
  induce->add_option("graph", ind_opt.graph_file, "edge-list file")->required();
  induce->add_option("clusters", ind_opt.clusters_file, "vertex (or edge) clustering")->required();
  induce->add_option("--n", induce_n, "vertex count override for the graph file")
      ->check(CLI::NonNegativeNumber);
  induce->add_flag("--from-edges", ind_opt.from_edges,
                   "input is an edge clustering; compute its closure");
  induce->add_flag("--closure", ind_opt.closure, "close the induced edge clustering");
  induce->add_option("--out", ind_opt.out, "output .clusters path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*compare) {
      if (compare_n >= 0) compare_opt.n_override = compare_n;
      return cmd_compare(compare_opt);
    }
    if (*experiment) return cmd_experiment(exp_opt);
    if (*generate) return cmd_generate(gen_opt);
    if (*induce) {
      if (induce_n >= 0) ind_opt.n_override = induce_n;
      return cmd_induce(ind_opt);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == clustcmp::errc::universe_mismatch ? kExitUniverseMismatch
                                                         : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
