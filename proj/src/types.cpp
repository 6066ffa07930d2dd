#include "graphspace/types.hpp"

#include <cmath>
#include <string>

#include "graphspace/errors.hpp"

namespace graphspace {

namespace {

void check_node_count(int n) {
  if (n < 1) throw DomainError("node count must be >= 1, got " + std::to_string(n));
}

}  // namespace

Multigraph::Multigraph(int n) : n_(n), m_(0) {
  check_node_count(n);
  w_.assign(static_cast<std::size_t>(n) * n, 0);
}

Multigraph::Multigraph(int n, std::vector<Weight> weights)
    : n_(n), w_(std::move(weights)), m_(0) {
  check_node_count(n);
  if (w_.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("weight matrix size does not match node count");
  for (Weight w : w_) {
    if (w < 0) throw DomainError("edge multiplicities must be non-negative");
    m_ += w;
  }
}

Multigraph Multigraph::from_rows(const std::vector<std::vector<Weight>>& rows) {
  int n = static_cast<int>(rows.size());
  check_node_count(n);
  std::vector<Weight> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("weight matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Multigraph(n, std::move(flat));
}

RealGraph::RealGraph(int n) : n_(n), m_(0.0) {
  check_node_count(n);
  w_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

RealGraph::RealGraph(int n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)), m_(0.0) {
  check_node_count(n);
  if (w_.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("weight matrix size does not match node count");
  for (double w : w_) {
    if (!(w >= 0.0)) throw DomainError("weights must be non-negative finite reals");
    m_ += w;
  }
}

Partition::Partition(std::vector<int> block_of, int block_count)
    : block_of_(std::move(block_of)), p_(block_count) {
  int n = static_cast<int>(block_of_.size());
  check_node_count(n);
  if (p_ < 1 || p_ > n)
    throw DomainError("block count must lie in [1, n], got " + std::to_string(p_));
  sizes_.assign(static_cast<std::size_t>(p_), 0);
  for (int b : block_of_) {
    if (b < 0 || b >= p_)
      throw DomainError("block index " + std::to_string(b) + " outside [0, " +
                        std::to_string(p_) + ")");
    ++sizes_[static_cast<std::size_t>(b)];
  }
  for (int r = 0; r < p_; ++r) {
    if (sizes_[static_cast<std::size_t>(r)] == 0)
      throw DomainError("block " + std::to_string(r) + " is empty");
  }
}

std::vector<std::vector<int>> Partition::members() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(p_));
  for (int r = 0; r < p_; ++r) out[static_cast<std::size_t>(r)].reserve(sizes_[static_cast<std::size_t>(r)]);
  for (int u = 0; u < node_count(); ++u)
    out[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(u)])].push_back(u);
  return out;
}

DegreeSequence degrees(const Multigraph& g) {
  int n = g.node_count();
  DegreeSequence d;
  d.k_out.assign(static_cast<std::size_t>(n), 0);
  d.k_in.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Weight w = g.weight(i, j);
      d.k_out[static_cast<std::size_t>(i)] += w;
      d.k_in[static_cast<std::size_t>(j)] += w;
    }
  }
  return d;
}

}  // namespace graphspace
