#pragma once

#include <vector>

#include "graphspace/ensembles.hpp"
#include "graphspace/model_spec.hpp"
#include "graphspace/rng.hpp"
#include "graphspace/types.hpp"

namespace graphspace {

/// Monte-Carlo estimate of the expected normalized edit distance between a
/// fixed graph and the model's ensemble.
struct EdevEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int n_samples = 0;
  std::vector<double> per_sample;
};

struct DistributionSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

/// Normalized-edit-distance values of ensemble samples to the ensemble
/// barycenter, with five-number summary (median-exclusive quartiles).
struct DistanceDistribution {
  std::vector<double> values;
  DistributionSummary summary;
};

DistributionSummary summarize(std::vector<double> values);

/// Normalization constant used when comparing G against spec: the model's
/// fixed edge count when it has one (G's total weight must then match), or
/// G's total weight for models without a fixed count (Waxman).
double edev_normalization(const Multigraph& g, const ModelSpec& spec);

/// E|a - X| for X ~ Binomial(N, p), by pmf summation over the support,
/// truncated once the remaining tail mass is below 1e-12.
double binomial_abs_dev(Weight a, Weight n_trials, double p);

/// per_sample[t] = ned(G, sample(spec, stream.at(t)), m_ref). Deterministic
/// given the stream; samples may be evaluated in parallel.
EdevEstimate edev_mc(const Multigraph& g, const ModelSpec& spec, int n_samples,
                     RngStream stream);

/// Closed-form EDEV for families whose entry marginals are binomial under
/// the edge-placement distribution (ER and SBM).
double edev_exact(const Multigraph& g, const ModelSpec& spec);

bool edev_exact_supported(const ModelSpec& spec);

DistanceDistribution distance_to_barycenter(const ModelSpec& spec, int n_samples,
                                            RngStream stream);

}  // namespace graphspace
