#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphspace/distance.hpp"
#include "graphspace/edev.hpp"
#include "graphspace/ensembles.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/experiments.hpp"
#include "graphspace/modularity.hpp"
#include "graphspace/sbm_geometry.hpp"
#include "test_support.hpp"

using namespace graphspace;

namespace {

// Brute-force E|a - X| for X ~ Bin(N, p): direct pmf formula, independent of
// the recurrence-based implementation.
double brute_binomial_abs_dev(Weight a, Weight n_trials, double p) {
  double total = 0.0;
  for (Weight x = 0; x <= n_trials; ++x) {
    double log_pmf = std::lgamma(static_cast<double>(n_trials) + 1.0) -
                     std::lgamma(static_cast<double>(x) + 1.0) -
                     std::lgamma(static_cast<double>(n_trials - x) + 1.0);
    if (p > 0.0) log_pmf += static_cast<double>(x) * std::log(p);
    if (p < 1.0) log_pmf += static_cast<double>(n_trials - x) * std::log1p(-p);
    total += std::exp(log_pmf) * std::abs(static_cast<double>(a) - static_cast<double>(x));
  }
  return total;
}

}  // namespace

TEST_CASE("binomial_abs_dev: worked values and domain") {
  CHECK(binomial_abs_dev(0, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(binomial_abs_dev(1, 2, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(binomial_abs_dev(0, 0, 0.3) == 0.0);
  CHECK(binomial_abs_dev(4, 10, 0.0) == 4.0);
  CHECK(binomial_abs_dev(4, 10, 1.0) == 6.0);
  CHECK_THROWS_AS(binomial_abs_dev(0, 1, -0.1), DomainError);
  CHECK_THROWS_AS(binomial_abs_dev(0, 1, 1.5), DomainError);
}

TEST_CASE("binomial_abs_dev matches brute-force summation") {
  RngStream rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Weight n_trials = static_cast<Weight>(rng.below(30));
    Weight a = static_cast<Weight>(rng.below(35));
    double p = rng.unit();
    double expected = brute_binomial_abs_dev(a, n_trials, p);
    CHECK(binomial_abs_dev(a, n_trials, p) == doctest::Approx(expected).epsilon(1e-9));
  }
  // Large-N regime stays finite and sane: mean absolute deviation of
  // Bin(5e5, 1e-4) around its mean 50 is close to sqrt(2 var / pi).
  double mad = binomial_abs_dev(50, 500000, 1e-4);
  CHECK(mad == doctest::Approx(std::sqrt(2.0 * 50.0 / 3.141592653589793)).epsilon(0.02));
}

TEST_CASE("edev_exact: worked enumeration oracle") {
  // ER(2,1): the edge lands on one of 4 equally likely cells. For G with
  // its single edge at (0,0): ed = 0 once, 2 otherwise -> E[ned] = 0.75.
  Multigraph g = Multigraph::from_rows({{1, 0}, {0, 0}});
  CHECK(edev_exact(g, ModelSpec(ErSpec{2, 1})) == doctest::Approx(0.75).epsilon(1e-12));

  Multigraph unique = Multigraph::from_rows({{3}});
  CHECK(edev_exact(unique, ModelSpec(ErSpec{1, 3})) == 0.0);

  CHECK_THROWS_AS(edev_exact(g, ModelSpec(presets::cfm_constant())), UnsupportedError);
  Multigraph wrong = Multigraph::from_rows({{2, 0}, {0, 0}});
  CHECK_THROWS_AS(edev_exact(wrong, ModelSpec(ErSpec{2, 1})), NormalizationError);
}

TEST_CASE("edev_mc: singleton ensemble, worked value, determinism") {
  Multigraph unique = Multigraph::from_rows({{4}});
  EdevEstimate est = edev_mc(unique, ModelSpec(ErSpec{1, 4}), 50, RngStream(3));
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);

  Multigraph g = Multigraph::from_rows({{1, 0}, {0, 0}});
  EdevEstimate mc = edev_mc(g, ModelSpec(ErSpec{2, 1}), 400, RngStream(17));
  CHECK(std::abs(mc.mean - 0.75) <= 3.0 * mc.std_error);

  EdevEstimate again = edev_mc(g, ModelSpec(ErSpec{2, 1}), 400, RngStream(17));
  CHECK(again.per_sample == mc.per_sample);
}

TEST_CASE("edev_mc agrees with edev_exact on random er/sbm instances") {
  RngStream rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    Weight m = 1 + static_cast<Weight>(rng.below(40));
    ModelSpec spec;
    if (trial % 2 == 0) {
      spec = ModelSpec(ErSpec{n, m});
    } else {
      int p = 1 + static_cast<int>(rng.below(2));
      Partition blocks = testing::random_partition(n, p, rng);
      std::vector<Weight> bm(static_cast<std::size_t>(p) * p, 0);
      for (Weight e = 0; e < m; ++e)
        ++bm[static_cast<std::size_t>(rng.below(bm.size()))];
      spec = ModelSpec(SbmSpec{blocks, bm});
    }
    Multigraph g = sample(spec, RngStream(1000 + trial));
    double exact = edev_exact(g, spec);
    EdevEstimate mc = edev_mc(g, spec, 1000, RngStream(2000 + trial));
    CHECK(std::abs(mc.mean - exact) <= 4.0 * mc.std_error + 1e-9);
  }
}

TEST_CASE("distance_to_barycenter: degenerate and reference models") {
  DistanceDistribution d0 = distance_to_barycenter(ModelSpec(ErSpec{1, 5}), 20, RngStream(0));
  for (double v : d0.values) CHECK(v == 0.0);

  // ER(50,1000) concentrates near 0.67.
  DistanceDistribution er =
      distance_to_barycenter(ModelSpec(presets::er_reference()), 100, RngStream(8));
  CHECK(er.summary.mean > 0.65);
  CHECK(er.summary.mean < 0.69);
  CHECK(er.summary.q3 - er.summary.q1 < 0.05);
}

TEST_CASE("summary statistics use median-exclusive quartiles") {
  DistributionSummary s = summarize({1.0, 2.0, 3.0, 4.0, 5.0});
  CHECK(s.median == 3.0);
  CHECK(s.q1 == 1.5);
  CHECK(s.q3 == 4.5);
  CHECK(s.min == 1.0);
  CHECK(s.max == 5.0);
  CHECK(s.mean == 3.0);
  DistributionSummary e = summarize({4.0, 1.0, 3.0, 2.0});
  CHECK(e.median == 2.5);
  CHECK(e.q1 == 1.5);
  CHECK(e.q3 == 3.5);
}

TEST_CASE("modularity: telescoping, cliques, singleton blocks") {
  RngStream rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    Multigraph g = testing::random_multigraph(n, 4, rng);
    if (g.total_weight() == 0) continue;
    Partition one_block(std::vector<int>(static_cast<std::size_t>(n), 0), 1);
    CHECK(modularity(g, one_block) == doctest::Approx(0.0).epsilon(1e-12));
  }

  // Two disconnected mutual edges; the matching 2-block split scores 1/4.
  Multigraph cliques = Multigraph::from_rows({{0, 1, 0, 0},
                                              {1, 0, 0, 0},
                                              {0, 0, 0, 1},
                                              {0, 0, 1, 0}});
  CHECK(modularity(cliques, Partition({0, 0, 1, 1}, 2)) ==
        doctest::Approx(0.25).epsilon(1e-12));

  // Singleton blocks on a loop-free graph reduce to -sum k_out k_in / (2 m^2).
  Multigraph g = Multigraph::from_rows({{0, 2, 1}, {1, 0, 0}, {3, 1, 0}});
  DegreeSequence d = degrees(g);
  double m = static_cast<double>(g.total_weight());
  double expected = 0.0;
  for (int u = 0; u < 3; ++u)
    expected -= static_cast<double>(d.k_out[u]) * static_cast<double>(d.k_in[u]);
  expected /= 2.0 * m * m;
  CHECK(modularity(g, Partition({0, 1, 2}, 3)) == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(modularity(Multigraph(3), Partition({0, 1, 2}, 3)), DomainError);
  CHECK_THROWS_AS(modularity(g, Partition({0, 1}, 2)), DimensionError);
}

TEST_CASE("sbm_barycenter_distance: worked example and exact scale invariance") {
  SbmSpec one_block{Partition({0, 0}, 1), {4}};
  SbmSpec two_blocks{Partition({0, 1}, 2), {2, 0, 0, 2}};
  CHECK(sbm_barycenter_distance(one_block, one_block) == 0.0);
  CHECK(sbm_barycenter_distance(one_block, two_blocks) == 0.5);

  // Agrees with the definition via explicit barycenters.
  double via_barycenters = normalized_edit_distance(
      barycenter(ModelSpec(one_block)), barycenter(ModelSpec(two_blocks)), 4.0);
  CHECK(sbm_barycenter_distance(one_block, two_blocks) ==
        doctest::Approx(via_barycenters).epsilon(1e-12));

  double base = sbm_barycenter_distance(one_block, two_blocks);
  for (Weight k : {Weight{1}, Weight{2}, Weight{10}, Weight{100}}) {
    CHECK(sbm_barycenter_distance(scale_sbm(one_block, k), scale_sbm(two_blocks, k)) == base);
  }

  RngStream rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    Partition b1 = testing::random_partition(n, 1 + static_cast<int>(rng.below(2)), rng);
    Partition b2 = testing::random_partition(n, 1 + static_cast<int>(rng.below(2)), rng);
    Weight m = 1 + static_cast<Weight>(rng.below(30));
    auto random_matrix = [&](const Partition& b) {
      int p = b.block_count();
      std::vector<Weight> bm(static_cast<std::size_t>(p) * p, 0);
      for (Weight e = 0; e < m; ++e) ++bm[static_cast<std::size_t>(rng.below(bm.size()))];
      return bm;
    };
    SbmSpec s1{b1, random_matrix(b1)};
    SbmSpec s2{b2, random_matrix(b2)};
    double d = sbm_barycenter_distance(s1, s2);
    CHECK(sbm_barycenter_distance(scale_sbm(s1, 7), scale_sbm(s2, 7)) == d);
    double via = normalized_edit_distance(barycenter(ModelSpec(s1)), barycenter(ModelSpec(s2)),
                                          static_cast<double>(m));
    CHECK(d == doctest::Approx(via).epsilon(1e-12));
  }

  SbmSpec mismatched{Partition({0, 1}, 2), {1, 0, 0, 2}};
  CHECK_THROWS_AS(sbm_barycenter_distance(one_block, mismatched), DomainError);
}

TEST_CASE("convergence_probe approaches the barycenter distance") {
  SbmSpec one_block{Partition({0, 0}, 1), {4}};
  SbmSpec two_blocks{Partition({0, 1}, 2), {2, 0, 0, 2}};

  // Identical models: the EDEV column tends to zero.
  auto self_rows = convergence_probe(two_blocks, two_blocks, {1, 8, 64, 512}, 40, RngStream(31));
  CHECK(self_rows.back().edev_vs_scaled_candidate < 0.05);
  CHECK(self_rows.back().edev_vs_scaled_candidate < self_rows.front().edev_vs_scaled_candidate);

  // Distinct pair: the EDEV column approaches d = 0.5.
  auto rows = convergence_probe(one_block, two_blocks, {1, 8, 64, 512}, 40, RngStream(32));
  CHECK(std::abs(rows.back().edev_vs_scaled_candidate - 0.5) < 0.05);
  // The own-barycenter column shrinks below 0.05 once k m >= 10 n^2.
  for (const auto& row : rows) {
    if (row.k * 4 >= 10 * 4) CHECK(row.ned_to_own_barycenter < 0.05);
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].ned_to_own_barycenter < rows[i - 1].ned_to_own_barycenter);

  CHECK_THROWS_AS(convergence_probe(one_block, two_blocks, {2, 2}, 5, RngStream(0)),
                  DomainError);
}

TEST_CASE("edev normalization rules") {
  // Waxman has no fixed edge count; the observed graph's weight is used.
  WaxmanSpec wax{4, 0.5, 1.0,
                 std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  Multigraph g = sample(ModelSpec(wax), RngStream(77));
  if (g.total_weight() > 0) {
    EdevEstimate est = edev_mc(g, ModelSpec(wax), 10, RngStream(5));
    CHECK(est.mean >= 0.0);
  }
  Multigraph empty(4);
  CHECK_THROWS_AS(edev_mc(empty, ModelSpec(wax), 10, RngStream(5)), NormalizationError);
}
