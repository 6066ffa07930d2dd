#include "graphspace/sbm_geometry.hpp"

#include <cstdlib>
#include <string>

#include "graphspace/distance.hpp"
#include "graphspace/edev.hpp"
#include "graphspace/ensembles.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/parallel.hpp"

namespace graphspace {

double sbm_barycenter_distance(const SbmSpec& s1, const SbmSpec& s2) {
  int n = s1.blocks.node_count();
  if (s2.blocks.node_count() != n)
    throw DimensionError("blockmodels must share the node set");
  Weight m1 = *fixed_total_weight(ModelSpec(s1));
  Weight m2 = *fixed_total_weight(ModelSpec(s2));
  if (m1 != m2)
    throw DomainError("blockmodels must have the same total edge count, got " +
                      std::to_string(m1) + " and " + std::to_string(m2));
  if (m1 == 0) throw DomainError("barycenter distance is undefined at zero edge count");

  const auto& sz1 = s1.blocks.block_sizes();
  const auto& sz2 = s2.blocks.block_sizes();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    int b1 = s1.blocks.block_of(i);
    int b2 = s2.blocks.block_of(i);
    for (int j = 0; j < n; ++j) {
      Weight cells1 = static_cast<Weight>(sz1[static_cast<std::size_t>(b1)]) *
                      sz1[static_cast<std::size_t>(s1.blocks.block_of(j))];
      Weight cells2 = static_cast<Weight>(sz2[static_cast<std::size_t>(b2)]) *
                      sz2[static_cast<std::size_t>(s2.blocks.block_of(j))];
      // |M1/c1 - M2/c2| = |M1*c2 - M2*c1| / (c1*c2); the numerator and the
      // full denominator are exact integers, so the division is a single
      // correctly-rounded quotient and a common factor k cancels exactly.
      __int128 numer = static_cast<__int128>(s1.block_weight(b1, s1.blocks.block_of(j))) * cells2 -
                       static_cast<__int128>(s2.block_weight(b2, s2.blocks.block_of(j))) * cells1;
      if (numer < 0) numer = -numer;
      double denom = static_cast<double>(cells1) * static_cast<double>(cells2) * 2.0 *
                     static_cast<double>(m1);
      total += static_cast<double>(numer) / denom;
    }
  }
  return total;
}

std::vector<ConvergenceRow> convergence_probe(const SbmSpec& s1, const SbmSpec& s2,
                                              const std::vector<Weight>& k_schedule,
                                              int n_samples, RngStream stream) {
  if (n_samples < 1) throw DomainError("sample count must be >= 1");
  for (std::size_t t = 0; t < k_schedule.size(); ++t) {
    if (k_schedule[t] < 1 || (t > 0 && k_schedule[t] <= k_schedule[t - 1]))
      throw DomainError("scale schedule must be strictly increasing and positive");
  }
  std::vector<ConvergenceRow> rows;
  rows.reserve(k_schedule.size());
  for (std::size_t step = 0; step < k_schedule.size(); ++step) {
    Weight k = k_schedule[step];
    SbmSpec own = scale_sbm(s1, k);
    SbmSpec candidate = scale_sbm(s2, k);
    ModelSpec own_spec(own);
    ModelSpec candidate_spec(candidate);
    RealGraph center = barycenter(own_spec);
    double m_ref = static_cast<double>(*fixed_total_weight(own_spec));
    RngStream step_stream = stream.child(static_cast<std::uint64_t>(step));
    std::vector<double> ned_vals(static_cast<std::size_t>(n_samples), 0.0);
    std::vector<double> edev_vals(static_cast<std::size_t>(n_samples), 0.0);
    parallel_for(n_samples, [&](std::int64_t t) {
      Multigraph g = sample(own_spec, step_stream.at(static_cast<std::uint64_t>(t)));
      ned_vals[static_cast<std::size_t>(t)] = normalized_edit_distance(g, center, m_ref);
      edev_vals[static_cast<std::size_t>(t)] = edev_exact(g, candidate_spec);
    });
    ConvergenceRow row;
    row.k = k;
    for (int t = 0; t < n_samples; ++t) {
      row.ned_to_own_barycenter += ned_vals[static_cast<std::size_t>(t)];
      row.edev_vs_scaled_candidate += edev_vals[static_cast<std::size_t>(t)];
    }
    row.ned_to_own_barycenter /= n_samples;
    row.edev_vs_scaled_candidate /= n_samples;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace graphspace
