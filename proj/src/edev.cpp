#include "graphspace/edev.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "graphspace/distance.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/parallel.hpp"

namespace graphspace {

namespace {

constexpr double kTailMass = 1e-12;

// Median of sorted[lo, hi).
double median_of(const std::vector<double>& sorted, std::size_t lo, std::size_t hi) {
  std::size_t len = hi - lo;
  std::size_t mid = lo + len / 2;
  return len % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

}  // namespace

DistributionSummary summarize(std::vector<double> values) {
  if (values.empty()) throw DomainError("cannot summarize an empty distribution");
  DistributionSummary s;
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  s.median = median_of(values, 0, values.size());
  // Median-exclusive quartiles: the middle element of an odd-length sample
  // belongs to neither half.
  std::size_t half = values.size() / 2;
  if (half == 0) {
    s.q1 = s.q3 = s.median;
  } else {
    s.q1 = median_of(values, 0, half);
    s.q3 = median_of(values, values.size() - half, values.size());
  }
  return s;
}

double edev_normalization(const Multigraph& g, const ModelSpec& spec) {
  if (g.node_count() != node_count(spec))
    throw DimensionError("graph and model disagree on node count");
  auto fixed = fixed_total_weight(spec);
  if (fixed) {
    if (g.total_weight() != *fixed)
      throw NormalizationError("graph total weight " + std::to_string(g.total_weight()) +
                               " does not match the model's edge count " +
                               std::to_string(*fixed));
    if (*fixed == 0)
      throw NormalizationError("normalized edit distance is undefined for empty ensembles");
    return static_cast<double>(*fixed);
  }
  // No fixed count (Waxman): normalize by the observed graph's weight.
  if (g.total_weight() == 0)
    throw NormalizationError("normalized edit distance is undefined for an empty graph");
  return static_cast<double>(g.total_weight());
}

double binomial_abs_dev(Weight a, Weight n_trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial probability must lie in [0, 1]");
  if (a < 0 || n_trials < 0) throw DomainError("binomial_abs_dev requires a, N >= 0");
  if (n_trials == 0) return static_cast<double>(a);
  if (p == 0.0) return static_cast<double>(a);
  if (p == 1.0) return static_cast<double>(a > n_trials ? a - n_trials : n_trials - a);

  double n = static_cast<double>(n_trials);
  double log_p = std::log(p);
  double log_q = std::log1p(-p);
  auto log_pmf = [&](double x) {
    return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
           x * log_p + (n - x) * log_q;
  };

  // Walk outward from the mode, taking the heavier next term first, until
  // the accumulated mass leaves less than kTailMass behind.
  Weight mode = static_cast<Weight>((n + 1.0) * p);
  if (mode > n_trials) mode = n_trials;
  double pmf_mode = std::exp(log_pmf(static_cast<double>(mode)));
  double target = static_cast<double>(a);

  double covered = pmf_mode;
  double result = pmf_mode * std::abs(target - static_cast<double>(mode));
  Weight lo = mode;
  Weight hi = mode;
  double pmf_lo = pmf_mode;
  double pmf_hi = pmf_mode;
  double next_lo = 0.0;
  double next_hi = 0.0;
  auto step_down = [&]() {
    double x = static_cast<double>(lo);
    return pmf_lo * (x * (1.0 - p)) / ((n - x + 1.0) * p);
  };
  auto step_up = [&]() {
    double x = static_cast<double>(hi);
    return pmf_hi * ((n - x) * p) / ((x + 1.0) * (1.0 - p));
  };
  next_lo = lo > 0 ? step_down() : 0.0;
  next_hi = hi < n_trials ? step_up() : 0.0;
  while (covered < 1.0 - kTailMass && (next_lo > 0.0 || next_hi > 0.0)) {
    if (next_lo >= next_hi) {
      --lo;
      pmf_lo = next_lo;
      covered += pmf_lo;
      result += pmf_lo * std::abs(target - static_cast<double>(lo));
      next_lo = lo > 0 ? step_down() : 0.0;
    } else {
      ++hi;
      pmf_hi = next_hi;
      covered += pmf_hi;
      result += pmf_hi * std::abs(target - static_cast<double>(hi));
      next_hi = hi < n_trials ? step_up() : 0.0;
    }
  }
  return result;
}

EdevEstimate edev_mc(const Multigraph& g, const ModelSpec& spec, int n_samples,
                     RngStream stream) {
  if (n_samples < 1) throw DomainError("sample count must be >= 1");
  double m_ref = edev_normalization(g, spec);
  EdevEstimate est;
  est.n_samples = n_samples;
  est.per_sample.assign(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](std::int64_t t) {
    Multigraph h = sample(spec, stream.at(static_cast<std::uint64_t>(t)));
    est.per_sample[static_cast<std::size_t>(t)] = normalized_edit_distance(g, h, m_ref);
  });
  double total = 0.0;
  for (double v : est.per_sample) total += v;
  est.mean = total / n_samples;
  if (n_samples > 1) {
    double ss = 0.0;
    for (double v : est.per_sample) ss += (v - est.mean) * (v - est.mean);
    est.std_error = std::sqrt(ss / (n_samples - 1)) / std::sqrt(static_cast<double>(n_samples));
  }
  return est;
}

bool edev_exact_supported(const ModelSpec& spec) {
  return std::holds_alternative<ErSpec>(spec) || std::holds_alternative<SbmSpec>(spec);
}

double edev_exact(const Multigraph& g, const ModelSpec& spec) {
  double m_ref = edev_normalization(g, spec);
  if (const auto* er = std::get_if<ErSpec>(&spec)) {
    // All entries share one binomial; group by observed multiplicity.
    std::map<Weight, Weight> counts;
    for (Weight w : g.weights()) ++counts[w];
    double p = 1.0 / (static_cast<double>(er->n) * static_cast<double>(er->n));
    double total = 0.0;
    for (const auto& [value, count] : counts)
      total += static_cast<double>(count) * binomial_abs_dev(value, er->m, p);
    return total / (2.0 * m_ref);
  }
  const auto* sbm = std::get_if<SbmSpec>(&spec);
  if (sbm == nullptr)
    throw UnsupportedError("exact EDEV requires binomial entry marginals (er or sbm)");
  int n = g.node_count();
  int p_blocks = sbm->blocks.block_count();
  const auto& sizes = sbm->blocks.block_sizes();
  // Group observed entries by block pair, then by multiplicity.
  std::vector<std::map<Weight, Weight>> counts(
      static_cast<std::size_t>(p_blocks) * p_blocks);
  for (int i = 0; i < n; ++i) {
    int bi = sbm->blocks.block_of(i);
    for (int j = 0; j < n; ++j) {
      int bj = sbm->blocks.block_of(j);
      ++counts[static_cast<std::size_t>(bi) * p_blocks + bj][g.weight(i, j)];
    }
  }
  double total = 0.0;
  for (int r = 0; r < p_blocks; ++r) {
    for (int s = 0; s < p_blocks; ++s) {
      double cells = static_cast<double>(sizes[static_cast<std::size_t>(r)]) *
                     static_cast<double>(sizes[static_cast<std::size_t>(s)]);
      Weight trials = sbm->block_weight(r, s);
      for (const auto& [value, count] :
           counts[static_cast<std::size_t>(r) * p_blocks + s])
        total += static_cast<double>(count) * binomial_abs_dev(value, trials, 1.0 / cells);
    }
  }
  return total / (2.0 * m_ref);
}

DistanceDistribution distance_to_barycenter(const ModelSpec& spec, int n_samples,
                                            RngStream stream) {
  if (n_samples < 1) throw DomainError("sample count must be >= 1");
  RealGraph center = barycenter(spec);
  auto fixed = fixed_total_weight(spec);
  if (fixed && *fixed == 0)
    throw NormalizationError("normalized edit distance is undefined for empty ensembles");
  DistanceDistribution dist;
  dist.values.assign(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](std::int64_t t) {
    Multigraph h = sample(spec, stream.at(static_cast<std::uint64_t>(t)));
    double m_ref = fixed ? static_cast<double>(*fixed)
                         : static_cast<double>(h.total_weight());
    dist.values[static_cast<std::size_t>(t)] = normalized_edit_distance(h, center, m_ref);
  });
  dist.summary = summarize(dist.values);
  return dist;
}

}  // namespace graphspace
