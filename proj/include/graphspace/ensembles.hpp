#pragma once

#include <vector>

#include "graphspace/model_spec.hpp"
#include "graphspace/rng.hpp"
#include "graphspace/types.hpp"

namespace graphspace {

/// Draws one graph from the model's ensemble. Deterministic in
/// (spec, stream.master_seed, stream.index). Supported families: ER (m
/// edges placed independently uniformly over ordered pairs), CFMD (uniform
/// matching of out-stubs to in-stubs; degrees exact), SBM (per block pair,
/// M[r][s] edges placed uniformly over the pair's ordered node pairs; block
/// sums exact), Waxman (undirected geometric graph, symmetrized).
/// Gravity/Radiation have no sampler and raise UnsupportedError.
Multigraph sample(const ModelSpec& spec, RngStream stream);

/// Entrywise expected weight matrix of the ensemble. Defined for all six
/// families; spatial families require positions.
RealGraph barycenter(const ModelSpec& spec);

struct EntropyResult {
  double nats = 0.0;
  /// True when the value is a closed-form estimate rather than an exact
  /// ensemble count (CFMD).
  bool approximate = false;
};

/// Natural log of the ensemble cardinality. Exact for ER and SBM
/// (multiset counts); for CFMD returns the stub-matching estimate
/// ln m! - sum ln k_out! - sum ln k_in!, flagged approximate. Canonical
/// families (Waxman, Gravity, Radiation) raise UnsupportedError.
EntropyResult entropy(const ModelSpec& spec);

/// Pairwise Euclidean distance matrix (row-major n*n).
std::vector<double> pairwise_distances(const std::vector<Point>& positions);

}  // namespace graphspace
