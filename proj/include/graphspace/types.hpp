#pragma once

#include <cstdint>
#include <vector>

namespace graphspace {

using Weight = std::int64_t;

/// Labelled directed multigraph with self-loops, stored as a dense n x n
/// matrix of edge multiplicities. Immutable after construction.
class Multigraph {
 public:
  /// Graph with n nodes and no edges.
  explicit Multigraph(int n);

  /// Takes a row-major n*n multiplicity matrix; rejects negative entries.
  Multigraph(int n, std::vector<Weight> weights);

  static Multigraph from_rows(const std::vector<std::vector<Weight>>& rows);

  int node_count() const noexcept { return n_; }
  Weight total_weight() const noexcept { return m_; }

  Weight weight(int i, int j) const noexcept {
    return w_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<Weight>& weights() const noexcept { return w_; }

  bool operator==(const Multigraph&) const = default;

 private:
  int n_;
  std::vector<Weight> w_;
  Weight m_;
};

/// Real-valued weight matrix on n labelled nodes; the natural home of
/// ensemble barycenters, which in general have fractional weights.
class RealGraph {
 public:
  explicit RealGraph(int n);
  RealGraph(int n, std::vector<double> weights);

  int node_count() const noexcept { return n_; }
  double total_weight() const noexcept { return m_; }

  double weight(int i, int j) const noexcept {
    return w_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& weights() const noexcept { return w_; }

  bool operator==(const RealGraph&) const = default;

 private:
  int n_;
  std::vector<double> w_;
  double m_;
};

/// Assignment of n nodes to p non-empty blocks, indexed 0..p-1.
class Partition {
 public:
  Partition(std::vector<int> block_of, int block_count);

  int node_count() const noexcept { return static_cast<int>(block_of_.size()); }
  int block_count() const noexcept { return p_; }
  int block_of(int u) const noexcept { return block_of_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& assignments() const noexcept { return block_of_; }
  const std::vector<int>& block_sizes() const noexcept { return sizes_; }

  /// Node ids grouped by block.
  std::vector<std::vector<int>> members() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> block_of_;
  int p_;
  std::vector<int> sizes_;
};

struct DegreeSequence {
  std::vector<Weight> k_out;
  std::vector<Weight> k_in;

  bool operator==(const DegreeSequence&) const = default;
};

/// Row and column sums of the weight matrix; both sum to total_weight().
DegreeSequence degrees(const Multigraph& g);

}  // namespace graphspace
