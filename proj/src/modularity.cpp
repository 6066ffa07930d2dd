#include "graphspace/modularity.hpp"

#include "graphspace/errors.hpp"

namespace graphspace {

double modularity(const Multigraph& g, const Partition& blocks) {
  if (blocks.node_count() != g.node_count())
    throw DimensionError("partition and graph disagree on node count");
  if (g.total_weight() == 0)
    throw DomainError("modularity is undefined for a graph with no edges");
  double m = static_cast<double>(g.total_weight());
  DegreeSequence deg = degrees(g);
  double q = 0.0;
  int n = g.node_count();
  for (int u = 0; u < n; ++u) {
    int bu = blocks.block_of(u);
    for (int v = 0; v < n; ++v) {
      if (blocks.block_of(v) != bu) continue;
      q += static_cast<double>(g.weight(u, v)) -
           static_cast<double>(deg.k_out[static_cast<std::size_t>(u)]) *
               static_cast<double>(deg.k_in[static_cast<std::size_t>(v)]) / m;
    }
  }
  return q / (2.0 * m);
}

}  // namespace graphspace
