#include "graphspace/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphspace/errors.hpp"
#include "graphspace/numeric.hpp"

namespace graphspace {

std::vector<double> pairwise_distances(const std::vector<Point>& positions) {
  std::size_t n = positions.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = positions[i].x - positions[j].x;
      double dy = positions[i].y - positions[j].y;
      double dist = std::sqrt(dx * dx + dy * dy);
      d[i * n + j] = dist;
      d[j * n + i] = dist;
    }
  }
  return d;
}

namespace {

Multigraph sample_er(const ErSpec& s, RngStream& rng) {
  std::vector<Weight> w(static_cast<std::size_t>(s.n) * s.n, 0);
  std::uint64_t cells = static_cast<std::uint64_t>(s.n) * static_cast<std::uint64_t>(s.n);
  for (Weight e = 0; e < s.m; ++e) ++w[rng.below(cells)];
  return Multigraph(s.n, std::move(w));
}

Multigraph sample_cfmd(const CfmdSpec& s, RngStream& rng) {
  int n = static_cast<int>(s.degrees.k_out.size());
  std::vector<int> out_stubs;
  std::vector<int> in_stubs;
  for (int i = 0; i < n; ++i) {
    out_stubs.insert(out_stubs.end(), static_cast<std::size_t>(s.degrees.k_out[i]), i);
    in_stubs.insert(in_stubs.end(), static_cast<std::size_t>(s.degrees.k_in[i]), i);
  }
  rng.shuffle(in_stubs);
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t t = 0; t < out_stubs.size(); ++t)
    ++w[static_cast<std::size_t>(out_stubs[t]) * n + in_stubs[t]];
  return Multigraph(n, std::move(w));
}

Multigraph sample_sbm(const SbmSpec& s, RngStream& rng) {
  int n = s.blocks.node_count();
  int p = s.blocks.block_count();
  auto members = s.blocks.members();
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      Weight count = s.block_weight(r, c);
      const auto& src = members[static_cast<std::size_t>(r)];
      const auto& dst = members[static_cast<std::size_t>(c)];
      for (Weight e = 0; e < count; ++e) {
        int u = src[rng.below(src.size())];
        int v = dst[rng.below(dst.size())];
        ++w[static_cast<std::size_t>(u) * n + v];
      }
    }
  }
  return Multigraph(n, std::move(w));
}

Multigraph sample_waxman(const WaxmanSpec& s, RngStream& rng) {
  int n = s.n;
  std::vector<Point> pos;
  if (s.positions) {
    pos = *s.positions;
  } else {
    pos.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      double x = rng.unit();
      double y = rng.unit();
      pos.push_back({x, y});
    }
  }
  auto dist = pairwise_distances(pos);
  // L is the realized maximum pairwise distance of this sample.
  double L = *std::max_element(dist.begin(), dist.end());
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double d = dist[static_cast<std::size_t>(u) * n + v];
      double exponent = L > 0.0 ? -d / (s.alpha * L) : 0.0;
      double prob = std::min(1.0, s.beta * std::exp(exponent));
      if (rng.unit() < prob) {
        w[static_cast<std::size_t>(u) * n + v] = 1;
        w[static_cast<std::size_t>(v) * n + u] = 1;
      }
    }
  }
  return Multigraph(n, std::move(w));
}

}  // namespace

Multigraph sample(const ModelSpec& spec, RngStream stream) {
  return std::visit(
      [&](const auto& s) -> Multigraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) return sample_er(s, stream);
        else if constexpr (std::is_same_v<T, CfmdSpec>) return sample_cfmd(s, stream);
        else if constexpr (std::is_same_v<T, SbmSpec>) return sample_sbm(s, stream);
        else if constexpr (std::is_same_v<T, WaxmanSpec>) return sample_waxman(s, stream);
        else
          throw UnsupportedError("sampler unsupported for model '" + model_name(ModelSpec(s)) +
                                 "' (barycenter only)");
      },
      spec);
}

namespace {

RealGraph barycenter_waxman(const WaxmanSpec& s) {
  if (!s.positions)
    throw SpecError("waxman barycenter requires fixed positions");
  int n = s.n;
  auto dist = pairwise_distances(*s.positions);
  double L = n > 1 ? *std::max_element(dist.begin(), dist.end()) : 0.0;
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = dist[static_cast<std::size_t>(i) * n + j];
      double exponent = L > 0.0 ? -d / (s.alpha * L) : 0.0;
      w[static_cast<std::size_t>(i) * n + j] = std::min(1.0, s.beta * std::exp(exponent));
    }
  }
  return RealGraph(n, std::move(w));
}

RealGraph barycenter_radiation(const RadiationSpec& s) {
  int n = static_cast<int>(s.positions.size());
  auto dist = pairwise_distances(s.positions);
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dij = dist[static_cast<std::size_t>(i) * n + j];
      // s_ij sums in-strengths over nodes strictly closer to i than j is.
      double sij = 0.0;
      for (int u = 0; u < n; ++u) {
        double diu = dist[static_cast<std::size_t>(i) * n + u];
        if (diu > 0.0 && diu < dij) sij += s.k_in[static_cast<std::size_t>(u)];
      }
      double ki_in = s.k_in[static_cast<std::size_t>(i)];
      double denom = (ki_in + sij) * (ki_in + s.k_in[static_cast<std::size_t>(j)] + sij);
      w[static_cast<std::size_t>(i) * n + j] =
          denom > 0.0 ? s.k_out[static_cast<std::size_t>(i)] * ki_in *
                            s.k_in[static_cast<std::size_t>(j)] / denom
                      : 0.0;
    }
  }
  return RealGraph(n, std::move(w));
}

}  // namespace

RealGraph barycenter(const ModelSpec& spec) {
  return std::visit(
      [&](const auto& s) -> RealGraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          double value = static_cast<double>(s.m) /
                         (static_cast<double>(s.n) * static_cast<double>(s.n));
          return RealGraph(s.n, std::vector<double>(static_cast<std::size_t>(s.n) * s.n, value));
        } else if constexpr (std::is_same_v<T, CfmdSpec>) {
          int n = static_cast<int>(s.degrees.k_out.size());
          double m = static_cast<double>(
              std::accumulate(s.degrees.k_out.begin(), s.degrees.k_out.end(), Weight{0}));
          if (m == 0.0) return RealGraph(n);
          std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              w[static_cast<std::size_t>(i) * n + j] =
                  static_cast<double>(s.degrees.k_out[i]) *
                  static_cast<double>(s.degrees.k_in[j]) / m;
          return RealGraph(n, std::move(w));
        } else if constexpr (std::is_same_v<T, SbmSpec>) {
          int n = s.blocks.node_count();
          const auto& sizes = s.blocks.block_sizes();
          std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
          for (int i = 0; i < n; ++i) {
            int bi = s.blocks.block_of(i);
            for (int j = 0; j < n; ++j) {
              int bj = s.blocks.block_of(j);
              double cells = static_cast<double>(sizes[static_cast<std::size_t>(bi)]) *
                             static_cast<double>(sizes[static_cast<std::size_t>(bj)]);
              w[static_cast<std::size_t>(i) * n + j] =
                  static_cast<double>(s.block_weight(bi, bj)) / cells;
            }
          }
          return RealGraph(n, std::move(w));
        } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
          return barycenter_waxman(s);
        } else if constexpr (std::is_same_v<T, GravitySpec>) {
          int n = static_cast<int>(s.positions.size());
          auto dist = pairwise_distances(s.positions);
          std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              w[static_cast<std::size_t>(i) * n + j] =
                  s.k_out[static_cast<std::size_t>(i)] * s.k_in[static_cast<std::size_t>(j)] *
                  deterrence_at(s.deterrence, dist[static_cast<std::size_t>(i) * n + j]);
          return RealGraph(n, std::move(w));
        } else {
          return barycenter_radiation(s);
        }
      },
      spec);
}

EntropyResult entropy(const ModelSpec& spec) {
  return std::visit(
      [](const auto& s) -> EntropyResult {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          Weight cells = static_cast<Weight>(s.n) * static_cast<Weight>(s.n);
          return {log_multiset_count(cells, s.m), false};
        } else if constexpr (std::is_same_v<T, SbmSpec>) {
          const auto& sizes = s.blocks.block_sizes();
          int p = s.blocks.block_count();
          double total = 0.0;
          for (int r = 0; r < p; ++r)
            for (int c = 0; c < p; ++c) {
              Weight cells = static_cast<Weight>(sizes[static_cast<std::size_t>(r)]) *
                             static_cast<Weight>(sizes[static_cast<std::size_t>(c)]);
              total += log_multiset_count(cells, s.block_weight(r, c));
            }
          return {total, false};
        } else if constexpr (std::is_same_v<T, CfmdSpec>) {
          // Stub-matching count ln m! - sum ln k_out! - sum ln k_in!; an
          // estimate of the distinct-graph count, not an exact cardinality.
          Weight m = std::accumulate(s.degrees.k_out.begin(), s.degrees.k_out.end(), Weight{0});
          double value = std::lgamma(static_cast<double>(m) + 1.0);
          for (Weight k : s.degrees.k_out) value -= std::lgamma(static_cast<double>(k) + 1.0);
          for (Weight k : s.degrees.k_in) value -= std::lgamma(static_cast<double>(k) + 1.0);
          return {value, true};
        } else {
          throw UnsupportedError("entropy is defined for microcanonical families only "
                                 "(er, cfmd, sbm)");
        }
      },
      spec);
}

}  // namespace graphspace
