#pragma once

#include <vector>

#include "graphspace/model_spec.hpp"
#include "graphspace/rng.hpp"

namespace graphspace {

/// Normalized edit distance between the barycenters of two blockmodels on
/// the same node set with the same total edge count. Computed from integer
/// cross-products so that scaling both block matrices by the same factor k
/// leaves the value bit-identical (the scale factor cancels in every
/// quotient before rounding).
double sbm_barycenter_distance(const SbmSpec& s1, const SbmSpec& s2);

struct ConvergenceRow {
  Weight k = 1;
  /// Mean ned(G_k, barycenter(S1(k))) over the samples.
  double ned_to_own_barycenter = 0.0;
  /// Mean exact EDEV of G_k against S2(k).
  double edev_vs_scaled_candidate = 0.0;
};

/// Empirical probe of the blockmodel scaling limit: for each k in the
/// schedule, draws G_k ~ S1(k) = (B1, k*M1) and reports the mean distance
/// to its own barycenter together with the mean exact EDEV against
/// S2(k) = (B2, k*M2). As k grows the first column vanishes and the second
/// approaches sbm_barycenter_distance(S1, S2).
std::vector<ConvergenceRow> convergence_probe(const SbmSpec& s1, const SbmSpec& s2,
                                              const std::vector<Weight>& k_schedule,
                                              int n_samples, RngStream stream);

}  // namespace graphspace
