#pragma once

#include "graphspace/types.hpp"

namespace graphspace {

/// Newman modularity of a partition, written as a comparison between the
/// observed within-block weights and the configuration-model barycenter:
/// (1/2m) * sum over same-block ordered pairs (u,v) of
/// (W[u][v] - k_out[u] * k_in[v] / m).
double modularity(const Multigraph& g, const Partition& blocks);

}  // namespace graphspace
