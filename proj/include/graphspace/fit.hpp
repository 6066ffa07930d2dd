#pragma once

#include <string>

#include "graphspace/model_spec.hpp"
#include "graphspace/rng.hpp"
#include "graphspace/types.hpp"

namespace graphspace {

/// A fitted candidate model together with a description of how it was
/// obtained. The fitted spec's ensemble always contains the graph it was
/// fitted on.
struct FitResult {
  ModelSpec spec;
  std::string source;
};

/// Blockmodel whose block matrix holds G's edge counts between the given
/// blocks; G belongs to the resulting ensemble by construction.
SbmSpec fit_sbm(const Multigraph& g, const Partition& blocks);

/// Configuration model with G's exact degree sequence; rejects empty graphs.
CfmdSpec fit_cfmd(const Multigraph& g);

FitResult fit_sbm_result(const Multigraph& g, const Partition& blocks);
FitResult fit_cfmd_result(const Multigraph& g);

/// Local search for a p-block partition minimizing the entropy of the
/// fitted blockmodel under single-node moves, keeping every block
/// non-empty; best result over `restarts` random initializations.
/// Deterministic given the stream.
Partition greedy_min_entropy_partition(const Multigraph& g, int p_blocks, int restarts,
                                       RngStream stream);

}  // namespace graphspace
