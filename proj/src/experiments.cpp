#include "graphspace/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "graphspace/csv.hpp"
#include "graphspace/edev.hpp"
#include "graphspace/ensembles.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/fit.hpp"
#include "graphspace/numeric.hpp"
#include "graphspace/parallel.hpp"
#include "graphspace/permutation_test.hpp"
#include "graphspace/svg.hpp"

namespace graphspace {

const std::vector<std::string> kExperimentPresets = {"fig2", "fig3", "fig4",
                                                     "fig5", "fig6", "fig7"};

namespace presets {

ErSpec er_reference() { return ErSpec{50, 1000}; }

CfmdSpec cfm_constant() {
  DegreeSequence d;
  d.k_out.assign(50, 20);
  d.k_in.assign(50, 20);
  return CfmdSpec{std::move(d)};
}

CfmdSpec cfm_arithmetic() {
  DegreeSequence d;
  for (Weight i = 0; i < 50; ++i) {
    d.k_out.push_back(i + 1);
    d.k_in.push_back(i + 1);
  }
  return CfmdSpec{std::move(d)};
}

CfmdSpec cfm_arithmetic_zero_based() {
  DegreeSequence d;
  for (Weight i = 0; i < 50; ++i) {
    d.k_out.push_back(i);
    d.k_in.push_back(i);
  }
  return CfmdSpec{std::move(d)};
}

namespace {

SbmSpec five_block(const std::vector<Weight>& diagonal, Weight off) {
  std::vector<int> block_of(50);
  for (int u = 0; u < 50; ++u) block_of[static_cast<std::size_t>(u)] = u / 10;
  std::vector<Weight> m(25, off);
  for (int r = 0; r < 5; ++r) m[static_cast<std::size_t>(r) * 5 + r] = diagonal[static_cast<std::size_t>(r)];
  return SbmSpec{Partition(std::move(block_of), 5), std::move(m)};
}

}  // namespace

SbmSpec sbm_homogeneous() { return five_block({120, 120, 120, 120, 120}, 20); }

SbmSpec sbm_heterogeneous() { return five_block({40, 80, 120, 160, 200}, 20); }

SbmSpec sbm_null_case() {
  std::vector<int> block_of(50);
  for (int u = 0; u < 50; ++u) block_of[static_cast<std::size_t>(u)] = u < 25 ? 0 : 1;
  return SbmSpec{Partition(std::move(block_of), 2), {500, 0, 0, 500}};
}

SbmSpec sbm_four_block(Weight internal, Weight external) {
  std::vector<int> block_of(100);
  for (int u = 0; u < 100; ++u) block_of[static_cast<std::size_t>(u)] = u / 25;
  std::vector<Weight> m(16, external);
  for (int r = 0; r < 4; ++r) m[static_cast<std::size_t>(r) * 4 + r] = internal;
  return SbmSpec{Partition(std::move(block_of), 4), std::move(m)};
}

WaxmanSpec waxman_config(double alpha, double beta) {
  WaxmanSpec w;
  w.n = 100;
  w.alpha = alpha;
  w.beta = beta;
  return w;
}

}  // namespace presets

namespace {

namespace fs = std::filesystem;

int resolved(const std::optional<int>& explicit_value, int preset_default, double scale) {
  if (explicit_value) {
    if (*explicit_value < 1) throw DomainError("experiment sizes must be >= 1");
    return *explicit_value;
  }
  return std::max(1, static_cast<int>(std::lround(preset_default * scale)));
}

std::filesystem::path emit(const ExperimentConfig& config, const std::string& name,
                           const std::string& content) {
  fs::path path = config.out_dir / name;
  csv::write_file(path, content);
  return path;
}

struct NamedSpec {
  std::string id;
  ModelSpec spec;
};

std::vector<NamedSpec> reference_models() {
  std::vector<NamedSpec> out;
  out.push_back({"er", ModelSpec(presets::er_reference())});
  out.push_back({"cfm_cst", ModelSpec(presets::cfm_constant())});
  out.push_back({"cfm_arith", ModelSpec(presets::cfm_arithmetic())});
  out.push_back({"sbm_hom", ModelSpec(presets::sbm_homogeneous())});
  out.push_back({"sbm_het", ModelSpec(presets::sbm_heterogeneous())});
  return out;
}

std::vector<fs::path> run_fig2(const ExperimentConfig& config) {
  int samples = resolved(config.samples, 100, config.scale);
  auto models = reference_models();
  RngStream root(config.seed);

  std::vector<DistanceDistribution> dists(models.size());
  for (std::size_t i = 0; i < models.size(); ++i)
    dists[i] = distance_to_barycenter(models[i].spec, samples,
                                      root.child(static_cast<std::uint64_t>(i)));

  std::string rows = "model,sample,ned\n";
  std::string summary = "model,n_samples,mean,min,q1,median,q3,max\n";
  std::vector<svg::Box> boxes;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& d = dists[i];
    for (std::size_t t = 0; t < d.values.size(); ++t)
      rows += models[i].id + "," + csv::cell(static_cast<long long>(t)) + "," +
              csv::cell(d.values[t]) + "\n";
    summary += models[i].id + "," + csv::cell(static_cast<long long>(samples)) + "," +
               csv::cell(d.summary.mean) + "," + csv::cell(d.summary.min) + "," +
               csv::cell(d.summary.q1) + "," + csv::cell(d.summary.median) + "," +
               csv::cell(d.summary.q3) + "," + csv::cell(d.summary.max) + "\n";
    boxes.push_back({models[i].id, d.summary, d.values, {}});
  }
  std::vector<fs::path> files;
  files.push_back(emit(config, "fig2.csv", rows));
  files.push_back(emit(config, "fig2_summary.csv", summary));
  if (config.svg)
    files.push_back(emit(config, "fig2.svg", svg::boxplot(boxes, "ned to barycenter")));
  return files;
}

// Probe graphs over a density sweep: a typical sample, a two-community
// graph, and a single-pair graph, all members of ER(n, m).
std::vector<fs::path> run_fig3(const ExperimentConfig& config) {
  const int n = 100;
  const std::vector<Weight> m_grid = {100,   200,   500,    1000,   2000,   5000,
                                      10000, 20000, 50000, 100000, 200000, 500000};
  RngStream root(config.seed);

  std::string rows = "m,density,entropy_nats,edev_g1,edev_g2,edev_g3\n";
  std::vector<double> xs;
  std::vector<double> e1;
  std::vector<double> e2;
  std::vector<double> e3;
  std::vector<double> ent;
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    Weight m = m_grid[i];
    ModelSpec er(ErSpec{n, m});
    Multigraph g1 = sample(er, root.child(i).at(1));

    // Two equal communities, half the edges placed uniformly inside each.
    std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
    RngStream halves = root.child(i).at(2);
    for (int half = 0; half < 2; ++half) {
      int base = half * (n / 2);
      std::uint64_t cells = static_cast<std::uint64_t>(n / 2) * (n / 2);
      for (Weight e = 0; e < m / 2; ++e) {
        std::uint64_t cell = halves.below(cells);
        int u = base + static_cast<int>(cell / (n / 2));
        int v = base + static_cast<int>(cell % (n / 2));
        ++w[static_cast<std::size_t>(u) * n + v];
      }
    }
    Multigraph g2(n, std::move(w));

    std::vector<Weight> w3(static_cast<std::size_t>(n) * n, 0);
    w3[1] = m;  // every edge on the ordered pair (0, 1)
    Multigraph g3(n, std::move(w3));

    double density = static_cast<double>(m) / (static_cast<double>(n) * n);
    double nats = entropy(er).nats;
    double v1 = edev_exact(g1, er);
    double v2 = edev_exact(g2, er);
    double v3 = edev_exact(g3, er);
    rows += csv::cell(static_cast<long long>(m)) + "," + csv::cell(density) + "," +
            csv::cell(nats) + "," + csv::cell(v1) + "," + csv::cell(v2) + "," + csv::cell(v3) +
            "\n";
    xs.push_back(density);
    e1.push_back(v1);
    e2.push_back(v2);
    e3.push_back(v3);
    ent.push_back(nats);
  }
  std::vector<fs::path> files;
  files.push_back(emit(config, "fig3.csv", rows));
  if (config.svg) {
    files.push_back(emit(config, "fig3_edev.svg",
                         svg::line_chart_logx({{"typical", xs, e1},
                                               {"two communities", xs, e2},
                                               {"single pair", xs, e3}},
                                              "density", "EDEV")));
    files.push_back(emit(config, "fig3_entropy.svg",
                         svg::line_chart_logx({{"entropy", xs, ent}}, "density", "nats")));
  }
  return files;
}

std::vector<fs::path> write_test_family(const ExperimentConfig& config, const std::string& stem,
                                        const std::vector<TestReport>& reports) {
  std::string rows = "rep,source,sample,edev\n";
  std::string tests = "rep,y,x_mean,theta,p_value,reject\n";
  std::vector<svg::Box> boxes;
  for (std::size_t rep = 0; rep < reports.size(); ++rep) {
    const auto& r = reports[rep];
    rows += csv::cell(static_cast<long long>(rep)) + ",observed,0," + csv::cell(r.y) + "\n";
    for (std::size_t i = 0; i < r.x.size(); ++i)
      rows += csv::cell(static_cast<long long>(rep)) + ",reference," +
              csv::cell(static_cast<long long>(i)) + "," + csv::cell(r.x[i]) + "\n";
    double x_mean = r.theta + r.y;
    tests += csv::cell(static_cast<long long>(rep)) + "," + csv::cell(r.y) + "," +
             csv::cell(x_mean) + "," + csv::cell(r.theta) + "," + csv::cell(r.p_value) + "," +
             (r.reject ? "true" : "false") + "\n";
    svg::Box box{"rep " + std::to_string(rep), summarize(r.x), r.x, r.y};
    boxes.push_back(std::move(box));
  }
  std::vector<fs::path> files;
  files.push_back(emit(config, stem + ".csv", rows));
  files.push_back(emit(config, stem + "_tests.csv", tests));
  if (config.svg)
    files.push_back(emit(config, stem + ".svg", svg::boxplot(boxes, "EDEV")));
  return files;
}

// Observed graphs from a generative model tested against a per-graph fitted
// (or fixed) candidate.
enum class Candidate { kEvenOddSbm, kCfmd, kGenerativeModel };

std::vector<fs::path> run_cross_test(const ExperimentConfig& config, const std::string& stem,
                                     const ModelSpec& generative, Candidate candidate,
                                     int default_q) {
  int reps = resolved(config.graphs, 5, config.scale);
  int q = resolved(config.q, default_q, config.scale);
  int inner = resolved(config.samples, 100, config.scale);
  const double delta = 0.01;
  RngStream root(config.seed);

  std::vector<TestReport> reports(static_cast<std::size_t>(reps));
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rep_stream = root.child(static_cast<std::uint64_t>(rep));
    Multigraph g = sample(generative, rep_stream.at(0));
    ModelSpec cand = generative;
    if (candidate == Candidate::kEvenOddSbm) {
      std::vector<int> even_odd(static_cast<std::size_t>(g.node_count()));
      for (int u = 0; u < g.node_count(); ++u) even_odd[static_cast<std::size_t>(u)] = u % 2;
      cand = ModelSpec(fit_sbm(g, Partition(std::move(even_odd), 2)));
    } else if (candidate == Candidate::kCfmd) {
      cand = ModelSpec(fit_cfmd(g));
    }
    reports[static_cast<std::size_t>(rep)] =
        permutation_test(g, cand, q, delta, rep_stream.child(1), inner);
  }
  return write_test_family(config, stem, reports);
}

std::vector<fs::path> run_fig7(const ExperimentConfig& config) {
  int per_model = resolved(config.graphs, 8, config.scale);
  int q = resolved(config.q, 200, config.scale);
  const double delta = 0.01;
  const int blocks = 4;
  const int restarts = 10;
  RngStream root(config.seed);

  struct Cell {
    std::string model;
    Weight m = 0;
    double p_value = 1.0;
    bool reject = false;
  };
  std::vector<std::pair<std::string, ModelSpec>> models = {
      {"sbm_90_0", ModelSpec(presets::sbm_four_block(90, 0))},
      {"sbm_75_5", ModelSpec(presets::sbm_four_block(75, 5))},
      {"sbm_60_10", ModelSpec(presets::sbm_four_block(60, 10))},
      {"sbm_45_15", ModelSpec(presets::sbm_four_block(45, 15))},
      {"waxman_0.1_1", ModelSpec(presets::waxman_config(0.1, 1.0))},
      {"waxman_0.08_1.6", ModelSpec(presets::waxman_config(0.08, 1.6))},
      {"waxman_0.06_2.7", ModelSpec(presets::waxman_config(0.06, 2.7))},
      {"waxman_0.04_8.5", ModelSpec(presets::waxman_config(0.04, 8.5))},
  };

  std::vector<std::vector<Cell>> grid(models.size(),
                                      std::vector<Cell>(static_cast<std::size_t>(per_model)));
  // Cells are independent; parallelize across the whole grid.
  std::int64_t total = static_cast<std::int64_t>(models.size()) * per_model;
  parallel_for(total, [&](std::int64_t idx) {
    std::size_t mi = static_cast<std::size_t>(idx) / static_cast<std::size_t>(per_model);
    int gi = static_cast<int>(idx % per_model);
    RngStream cell_stream = root.child(static_cast<std::uint64_t>(idx));
    Multigraph g = sample(models[mi].second, cell_stream.at(0));
    Partition fitted = greedy_min_entropy_partition(g, blocks, restarts, cell_stream.child(1));
    ModelSpec cand(fit_sbm(g, fitted));
    TestReport report = permutation_test(g, cand, q, delta, cell_stream.child(2));
    grid[mi][static_cast<std::size_t>(gi)] =
        Cell{models[mi].first, g.total_weight(), report.p_value, report.reject};
  });

  std::string rows = "model,graph,m,p_value,reject\n";
  std::vector<std::vector<double>> heat(models.size());
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (int gi = 0; gi < per_model; ++gi) col_labels.push_back(std::to_string(gi));
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    row_labels.push_back(models[mi].first);
    for (int gi = 0; gi < per_model; ++gi) {
      const Cell& cell = grid[mi][static_cast<std::size_t>(gi)];
      rows += cell.model + "," + csv::cell(static_cast<long long>(gi)) + "," +
              csv::cell(static_cast<long long>(cell.m)) + "," + csv::cell(cell.p_value) + "," +
              (cell.reject ? "true" : "false") + "\n";
      heat[mi].push_back(cell.p_value);
    }
  }
  std::vector<fs::path> files;
  files.push_back(emit(config, "fig7.csv", rows));
  if (config.svg)
    files.push_back(emit(config, "fig7.svg", svg::heatmap(row_labels, col_labels, heat)));
  return files;
}

}  // namespace

std::vector<std::filesystem::path> run_experiment(const std::string& preset,
                                                  const ExperimentConfig& config) {
  if (std::find(kExperimentPresets.begin(), kExperimentPresets.end(), preset) ==
      kExperimentPresets.end())
    throw DomainError("unknown experiment preset '" + preset + "'");
  if (!(config.scale > 0.0)) throw DomainError("scale must be positive");
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec || !fs::is_directory(config.out_dir))
    throw Error("cannot create output directory " + config.out_dir.string());

  if (preset == "fig2") return run_fig2(config);
  if (preset == "fig3") return run_fig3(config);
  if (preset == "fig4")
    return run_cross_test(config, "fig4",
                          ModelSpec(presets::cfm_arithmetic_zero_based()),
                          Candidate::kEvenOddSbm, 100);
  if (preset == "fig5")
    return run_cross_test(config, "fig5", ModelSpec(presets::sbm_null_case()),
                          Candidate::kCfmd, 100);
  if (preset == "fig6")
    return run_cross_test(config, "fig6", ModelSpec(presets::sbm_null_case()),
                          Candidate::kGenerativeModel, 200);
  return run_fig7(config);
}

}  // namespace graphspace
