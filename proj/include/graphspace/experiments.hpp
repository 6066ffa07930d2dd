#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "graphspace/model_spec.hpp"

namespace graphspace {

/// Experiment presets regenerate the reference studies as CSV data files
/// (plus optional SVG renderings). All randomness derives from `seed`;
/// identical configurations produce byte-identical CSVs.
struct ExperimentConfig {
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  /// fig2: samples per model; fig5: Monte-Carlo samples per EDEV.
  std::optional<int> samples;
  /// Reference sample count of the permutation test (fig4-fig7).
  std::optional<int> q;
  /// Replicates (fig4-fig6) or graphs per model (fig7).
  std::optional<int> graphs;
  /// Blanket multiplier applied to the defaults of any size left unset.
  double scale = 1.0;
  bool svg = false;
};

extern const std::vector<std::string> kExperimentPresets;  // fig2..fig7

/// Runs one preset; returns the files written, in order.
std::vector<std::filesystem::path> run_experiment(const std::string& preset,
                                                  const ExperimentConfig& config);

/// Model definitions shared by the presets and the acceptance suite.
namespace presets {

/// 50 nodes, 1000 edges.
ErSpec er_reference();
/// 50 nodes, constant degrees k_i = 20.
CfmdSpec cfm_constant();
/// 50 nodes, arithmetic degrees k_i = i + 1.
CfmdSpec cfm_arithmetic();
/// 50 nodes, 5 blocks of 10, within-block density 1.2, cross density 0.2.
SbmSpec sbm_homogeneous();
/// Same layout with within-block densities 0.4, 0.8, 1.2, 1.6, 2.0.
SbmSpec sbm_heterogeneous();
/// 50 nodes, two blocks of 25, diagonal block counts 500, no cross edges.
SbmSpec sbm_null_case();
/// 50 nodes, degrees k_i = i (node 0 isolated).
CfmdSpec cfm_arithmetic_zero_based();
/// 100 nodes, four blocks of 25 with the given within/cross edge counts.
SbmSpec sbm_four_block(Weight internal, Weight external);
/// 100 nodes, random positions.
WaxmanSpec waxman_config(double alpha, double beta);

}  // namespace presets

}  // namespace graphspace
