#pragma once

#include "graphspace/types.hpp"

namespace graphspace {

/// Entrywise L1 distance between weight matrices of graphs on the same
/// labelled vertex set. A metric for fixed n.
double edit_distance(const Multigraph& g, const Multigraph& h);
double edit_distance(const RealGraph& g, const RealGraph& h);
double edit_distance(const Multigraph& g, const RealGraph& h);
double edit_distance(const RealGraph& g, const Multigraph& h);

/// edit_distance / (2 * m_ref). Within an ensemble of total edge count
/// m_ref this is the fraction of differing edges and lies in [0, 1].
template <typename G, typename H>
double normalized_edit_distance(const G& g, const H& h, double m_ref);

}  // namespace graphspace
