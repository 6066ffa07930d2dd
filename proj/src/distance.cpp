#include "graphspace/distance.hpp"

#include <cmath>
#include <cstdlib>

#include "graphspace/errors.hpp"

namespace graphspace {

namespace {

template <typename A, typename B>
double l1_diff(const A& g, const B& h) {
  if (g.node_count() != h.node_count())
    throw DimensionError("edit distance requires graphs on the same node set");
  const auto& a = g.weights();
  const auto& b = h.weights();
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    total += std::abs(static_cast<double>(a[k]) - static_cast<double>(b[k]));
  return total;
}

}  // namespace

double edit_distance(const Multigraph& g, const Multigraph& h) {
  if (g.node_count() != h.node_count())
    throw DimensionError("edit distance requires graphs on the same node set");
  // Integer path: exact for multiplicity matrices.
  const auto& a = g.weights();
  const auto& b = h.weights();
  Weight total = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    total += a[k] > b[k] ? a[k] - b[k] : b[k] - a[k];
  return static_cast<double>(total);
}

double edit_distance(const RealGraph& g, const RealGraph& h) { return l1_diff(g, h); }
double edit_distance(const Multigraph& g, const RealGraph& h) { return l1_diff(g, h); }
double edit_distance(const RealGraph& g, const Multigraph& h) { return l1_diff(g, h); }

template <typename G, typename H>
double normalized_edit_distance(const G& g, const H& h, double m_ref) {
  if (!(m_ref > 0.0)) throw DomainError("normalization edge count must be positive");
  return edit_distance(g, h) / (2.0 * m_ref);
}

template double normalized_edit_distance(const Multigraph&, const Multigraph&, double);
template double normalized_edit_distance(const RealGraph&, const RealGraph&, double);
template double normalized_edit_distance(const Multigraph&, const RealGraph&, double);
template double normalized_edit_distance(const RealGraph&, const Multigraph&, double);

}  // namespace graphspace
