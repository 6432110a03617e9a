#include "clustcmp/experiment.hpp"

#include <cmath>
#include <map>
#include <ostream>

#include "clustcmp/baselines.hpp"
#include "clustcmp/format.hpp"
#include "clustcmp/generators.hpp"
#include "clustcmp/rng.hpp"
#include "clustcmp/similarity.hpp"

namespace clustcmp {

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::fstar_wo: return "fstar_wo";
    case Measure::fstar_w: return "fstar_w";
    case Measure::fstar_wo_ab: return "fstar_wo_ab";
    case Measure::fstar_wo_ba: return "fstar_wo_ba";
    case Measure::fstar_w_ab: return "fstar_w_ab";
    case Measure::fstar_w_ba: return "fstar_w_ba";
    case Measure::omega: return "omega";
    case Measure::onmi_lfk: return "onmi_lfk";
    case Measure::onmi_mgh: return "onmi_mgh";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(const std::string& name) {
  for (Measure m : {Measure::fstar_wo, Measure::fstar_w, Measure::fstar_wo_ab,
                    Measure::fstar_wo_ba, Measure::fstar_w_ab, Measure::fstar_w_ba,
                    Measure::omega, Measure::onmi_lfk, Measure::onmi_mgh}) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

double evaluate_measure(Measure m, const Clustering& a, const Clustering& b) {
  switch (m) {
    case Measure::fstar_wo: return fstar_wo(a, b);
    case Measure::fstar_w: return fstar_w(a, b);
    case Measure::fstar_wo_ab: return fstar_wo_asym(a, b);
    case Measure::fstar_wo_ba: return fstar_wo_asym(b, a);
    case Measure::fstar_w_ab: return fstar_w_asym(a, b);
    case Measure::fstar_w_ba: return fstar_w_asym(b, a);
    case Measure::omega: return omega_index(a, b);
    case Measure::onmi_lfk: return onmi(a, b, OnmiVariant::lfk);
    case Measure::onmi_mgh: return onmi(a, b, OnmiVariant::mgh);
  }
  throw Error(errc::invalid_argument, "unknown measure");
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::shuffle: return "shuffle";
    case Scenario::skew: return "skew";
    case Scenario::kclusters: return "kclusters";
    case Scenario::overlap: return "overlap";
    case Scenario::outliers: return "outliers";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(const std::string& name) {
  for (Scenario s : {Scenario::shuffle, Scenario::skew, Scenario::kclusters, Scenario::overlap,
                     Scenario::outliers}) {
    if (scenario_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<double> default_grid(Scenario s) {
  switch (s) {
    case Scenario::shuffle:
      return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    case Scenario::skew: {
      // 0, n/4, n/2, ..., 10n for n = 1024.
      std::vector<double> grid;
      for (int i = 0; i <= 40; ++i) grid.push_back(256.0 * i);
      return grid;
    }
    case Scenario::kclusters:
      return {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    case Scenario::overlap:
      return {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    case Scenario::outliers:
      return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  }
  return {};
}

namespace {

std::vector<std::int64_t> geometric_sizes(const ExperimentSpec& spec) {
  if (!spec.sizes.empty()) return spec.sizes;
  return std::vector<std::int64_t>(32, 32);
}

double reference_eta(const ExperimentSpec& spec) {
  if (spec.reference_eta) return *spec.reference_eta;
  return spec.scenario == Scenario::outliers ? 0.5 : 3.0;
}

std::int64_t integral_param(double param, const char* what) {
  const double rounded = std::nearbyint(param);
  if (param != rounded) {
    throw Error(errc::invalid_argument, std::string(what) + " must be an integer, got " +
                                            format_value(param));
  }
  return static_cast<std::int64_t>(rounded);
}

}  // namespace

ScenarioDraw draw_scenario(const ExperimentSpec& spec, double param, std::uint64_t rep_seed) {
  Rng rng(rep_seed);
  switch (spec.scenario) {
    case Scenario::shuffle: {
      auto pair = scenario_shuffle(param, rng);
      return {std::move(pair.first), std::move(pair.second)};
    }
    case Scenario::skew: {
      auto pair = scenario_skew(integral_param(param, "steps"), rng);
      return {std::move(pair.first), std::move(pair.second)};
    }
    case Scenario::kclusters: {
      auto pair = scenario_kclusters(integral_param(param, "k"), rng);
      return {std::move(pair.first), std::move(pair.second)};
    }
    case Scenario::overlap:
    case Scenario::outliers: {
      const GeometricLayer layer = build_layer(geometric_sizes(spec), rng);
      Clustering reference = geometric_clustering(layer, reference_eta(spec));
      Clustering probe = geometric_clustering(layer, param);
      return {std::move(probe), std::move(reference)};
    }
  }
  throw Error(errc::invalid_argument, "unknown scenario");
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  std::vector<ExperimentRow> rows;
  rows.reserve(spec.grid.size() * static_cast<std::size_t>(spec.reps) * spec.measures.size());
  const bool shared_layer =
      spec.scenario == Scenario::overlap || spec.scenario == Scenario::outliers;
  for (std::size_t g = 0; g < spec.grid.size(); ++g) {
    for (int rep = 0; rep < spec.reps; ++rep) {
      // Geometric scenarios reuse one layer per repetition across the whole
      // grid (the reference clustering must come from the same layer).
      const std::uint64_t rep_seed = Rng::derive_seed(
          spec.seed, shared_layer ? 0 : g, static_cast<std::uint64_t>(rep));
      const ScenarioDraw draw = draw_scenario(spec, spec.grid[g], rep_seed);
      for (Measure m : spec.measures) {
        rows.push_back({g, spec.grid[g], rep, rep_seed, m,
                        evaluate_measure(m, draw.first, draw.second)});
      }
    }
  }
  return rows;
}

void write_raw_csv(std::ostream& out, const ExperimentSpec& spec,
                   const std::vector<ExperimentRow>& rows) {
  out << "scenario,param,rep,seed,measure,value\n";
  const std::string name = scenario_name(spec.scenario);
  for (const auto& row : rows) {
    out << name << ',' << format_value(row.param) << ',' << row.rep << ',' << row.rep_seed << ','
        << measure_name(row.measure) << ',' << format_value(row.value) << "\n";
  }
}

void write_aggregate_csv(std::ostream& out, const ExperimentSpec& spec,
                         const std::vector<ExperimentRow>& rows) {
  // (grid index, measure) -> values in rep order.
  std::map<std::pair<std::size_t, int>, std::vector<double>> groups;
  std::map<std::pair<std::size_t, int>, double> params;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.grid_index, static_cast<int>(row.measure));
    groups[key].push_back(row.value);
    params[key] = row.param;
  }
  out << "scenario,param,measure,mean,std,reps\n";
  const std::string name = scenario_name(spec.scenario);
  for (const auto& [key, values] : groups) {
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double std_dev =
        values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    out << name << ',' << format_value(params[key]) << ','
        << measure_name(static_cast<Measure>(key.second)) << ',' << format_value(mean) << ','
        << format_value(std_dev) << ',' << values.size() << "\n";
  }
}

}  // namespace clustcmp
