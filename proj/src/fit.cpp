#include "graphspace/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "graphspace/ensembles.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/numeric.hpp"

namespace graphspace {

SbmSpec fit_sbm(const Multigraph& g, const Partition& blocks) {
  if (blocks.node_count() != g.node_count())
    throw DimensionError("partition and graph disagree on node count");
  int p = blocks.block_count();
  std::vector<Weight> m(static_cast<std::size_t>(p) * p, 0);
  int n = g.node_count();
  for (int u = 0; u < n; ++u) {
    int bu = blocks.block_of(u);
    for (int v = 0; v < n; ++v)
      m[static_cast<std::size_t>(bu) * p + blocks.block_of(v)] += g.weight(u, v);
  }
  return SbmSpec{blocks, std::move(m)};
}

CfmdSpec fit_cfmd(const Multigraph& g) {
  if (g.total_weight() < 1)
    throw DomainError("cannot fit a configuration model to an empty graph");
  return CfmdSpec{degrees(g)};
}

FitResult fit_sbm_result(const Multigraph& g, const Partition& blocks) {
  return {ModelSpec(fit_sbm(g, blocks)),
          "block matrix learned on the graph over a " +
              std::to_string(blocks.block_count()) + "-block partition"};
}

FitResult fit_cfmd_result(const Multigraph& g) {
  return {ModelSpec(fit_cfmd(g)), "degree sequence learned on the graph"};
}

Partition greedy_min_entropy_partition(const Multigraph& g, int p_blocks, int restarts,
                                       RngStream stream) {
  int n = g.node_count();
  if (p_blocks < 1 || p_blocks > n)
    throw DomainError("block count must lie in [1, n]");
  if (restarts < 1) throw DomainError("restart count must be >= 1");
  if (p_blocks == 1) return Partition(std::vector<int>(static_cast<std::size_t>(n), 0), 1);

  std::vector<int> best_assignment;
  double best_entropy = std::numeric_limits<double>::infinity();

  for (int r = 0; r < restarts; ++r) {
    RngStream rng = stream.child(static_cast<std::uint64_t>(r));
    // Random init with every block represented: a random permutation seeds
    // the first p blocks, the rest is uniform.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      assignment[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
          i < p_blocks ? i : static_cast<int>(rng.below(static_cast<std::uint64_t>(p_blocks)));

    std::vector<int> sizes(static_cast<std::size_t>(p_blocks), 0);
    for (int b : assignment) ++sizes[static_cast<std::size_t>(b)];
    std::vector<Weight> block_m(static_cast<std::size_t>(p_blocks) * p_blocks, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        block_m[static_cast<std::size_t>(assignment[static_cast<std::size_t>(u)]) * p_blocks +
                assignment[static_cast<std::size_t>(v)]] += g.weight(u, v);

    auto term = [&](int row, int col, const std::vector<int>& sz,
                    const std::vector<Weight>& bm) {
      Weight cells = static_cast<Weight>(sz[static_cast<std::size_t>(row)]) *
                     sz[static_cast<std::size_t>(col)];
      return log_multiset_count(cells, bm[static_cast<std::size_t>(row) * p_blocks + col]);
    };
    auto full_entropy = [&](const std::vector<int>& sz, const std::vector<Weight>& bm) {
      double total = 0.0;
      for (int a = 0; a < p_blocks; ++a)
        for (int b = 0; b < p_blocks; ++b) total += term(a, b, sz, bm);
      return total;
    };

    double current = full_entropy(sizes, block_m);
    std::vector<Weight> w_out(static_cast<std::size_t>(p_blocks));
    std::vector<Weight> w_in(static_cast<std::size_t>(p_blocks));
    bool moved = true;
    int sweeps = 0;
    while (moved && sweeps < 200) {
      moved = false;
      ++sweeps;
      for (int u = 0; u < n; ++u) {
        int from = assignment[static_cast<std::size_t>(u)];
        if (sizes[static_cast<std::size_t>(from)] == 1) continue;  // keep blocks non-empty
        std::fill(w_out.begin(), w_out.end(), 0);
        std::fill(w_in.begin(), w_in.end(), 0);
        for (int v = 0; v < n; ++v) {
          int bv = assignment[static_cast<std::size_t>(v)];
          w_out[static_cast<std::size_t>(bv)] += g.weight(u, v);
          w_in[static_cast<std::size_t>(bv)] += g.weight(v, u);
        }
        Weight self_loop = g.weight(u, u);

        int best_to = from;
        double best_delta = -1e-9;  // strict improvement only
        for (int to = 0; to < p_blocks; ++to) {
          if (to == from) continue;
          // Apply the candidate move to scratch copies of the touched rows
          // and columns and re-evaluate only those terms.
          auto sz = sizes;
          auto bm = block_m;
          double before = 0.0;
          for (int b = 0; b < p_blocks; ++b) {
            before += term(from, b, sz, bm) + term(to, b, sz, bm);
            if (b != from && b != to) before += term(b, from, sz, bm) + term(b, to, sz, bm);
          }
          --sz[static_cast<std::size_t>(from)];
          ++sz[static_cast<std::size_t>(to)];
          for (int b = 0; b < p_blocks; ++b) {
            Weight out_b = w_out[static_cast<std::size_t>(b)];
            Weight in_b = w_in[static_cast<std::size_t>(b)];
            bm[static_cast<std::size_t>(from) * p_blocks + b] -= out_b;
            bm[static_cast<std::size_t>(to) * p_blocks + b] += out_b;
            bm[static_cast<std::size_t>(b) * p_blocks + from] -= in_b;
            bm[static_cast<std::size_t>(b) * p_blocks + to] += in_b;
          }
          // The self-loop moved with u; the row/col updates double-count it.
          bm[static_cast<std::size_t>(from) * p_blocks + from] += self_loop;
          bm[static_cast<std::size_t>(to) * p_blocks + to] += self_loop;
          bm[static_cast<std::size_t>(from) * p_blocks + to] -= self_loop;
          bm[static_cast<std::size_t>(to) * p_blocks + from] -= self_loop;
          double after = 0.0;
          for (int b = 0; b < p_blocks; ++b) {
            after += term(from, b, sz, bm) + term(to, b, sz, bm);
            if (b != from && b != to) after += term(b, from, sz, bm) + term(b, to, sz, bm);
          }
          double delta = after - before;
          if (delta < best_delta) {
            best_delta = delta;
            best_to = to;
          }
        }
        if (best_to != from) {
          --sizes[static_cast<std::size_t>(from)];
          ++sizes[static_cast<std::size_t>(best_to)];
          for (int b = 0; b < p_blocks; ++b) {
            Weight out_b = w_out[static_cast<std::size_t>(b)];
            Weight in_b = w_in[static_cast<std::size_t>(b)];
            block_m[static_cast<std::size_t>(from) * p_blocks + b] -= out_b;
            block_m[static_cast<std::size_t>(best_to) * p_blocks + b] += out_b;
            block_m[static_cast<std::size_t>(b) * p_blocks + from] -= in_b;
            block_m[static_cast<std::size_t>(b) * p_blocks + best_to] += in_b;
          }
          block_m[static_cast<std::size_t>(from) * p_blocks + from] += self_loop;
          block_m[static_cast<std::size_t>(best_to) * p_blocks + best_to] += self_loop;
          block_m[static_cast<std::size_t>(from) * p_blocks + best_to] -= self_loop;
          block_m[static_cast<std::size_t>(best_to) * p_blocks + from] -= self_loop;
          assignment[static_cast<std::size_t>(u)] = best_to;
          current += best_delta;
          moved = true;
        }
      }
    }
    current = full_entropy(sizes, block_m);  // refresh accumulated drift
    if (current < best_entropy) {
      best_entropy = current;
      best_assignment = assignment;
    }
  }
  return Partition(std::move(best_assignment), p_blocks);
}

}  // namespace graphspace
