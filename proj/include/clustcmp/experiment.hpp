#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clustcmp/clustering.hpp"

namespace clustcmp {

enum class Measure {
  fstar_wo,
  fstar_w,
  fstar_wo_ab,
  fstar_wo_ba,
  fstar_w_ab,
  fstar_w_ba,
  omega,
  onmi_lfk,
  onmi_mgh,
};

std::string measure_name(Measure m);
std::optional<Measure> parse_measure(const std::string& name);
double evaluate_measure(Measure m, const Clustering& a, const Clustering& b);

enum class Scenario { shuffle, skew, kclusters, overlap, outliers };

std::string scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& name);

// Full-scale parameter grid for each scenario's sweep.
std::vector<double> default_grid(Scenario s);

struct ExperimentSpec {
  Scenario scenario = Scenario::shuffle;
  std::vector<double> grid;                       // fraction / steps / k / eta per scenario
  int reps = 100;
  std::uint64_t seed = 1;
  std::vector<Measure> measures = {Measure::fstar_wo};
  std::vector<std::int64_t> sizes;                // geometric part sizes; default 32 parts of 32
  std::optional<double> reference_eta;            // default 3.0 (overlap) / 0.5 (outliers)
};

struct ExperimentRow {
  std::size_t grid_index = 0;
  double param = 0.0;
  int rep = 0;
  std::uint64_t rep_seed = 0;
  Measure measure = Measure::fstar_wo;
  double value = 0.0;
};

// Generates the clustering pair for one (scenario, parameter, seed) draw.
// For the geometric scenarios the layer depends on the seed only, so every
// grid point of a repetition shares one layer and is compared against the
// reference-eta clustering of that layer.
struct ScenarioDraw {
  Clustering first;
  Clustering second;
};
ScenarioDraw draw_scenario(const ExperimentSpec& spec, double param, std::uint64_t rep_seed);

// Runs reps x grid sequentially with derived per-repetition seeds. Rows are
// ordered by (grid index, rep, measure); identical (seed, grid) reruns are
// byte-identical after formatting.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

// Raw schema:       scenario,param,rep,seed,measure,value
// Aggregate schema: scenario,param,measure,mean,std,reps  (sample std dev)
void write_raw_csv(std::ostream& out, const ExperimentSpec& spec,
                   const std::vector<ExperimentRow>& rows);
void write_aggregate_csv(std::ostream& out, const ExperimentSpec& spec,
                         const std::vector<ExperimentRow>& rows);

}  // namespace clustcmp
