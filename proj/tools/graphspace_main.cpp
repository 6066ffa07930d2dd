#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphspace/csv.hpp"
#include "graphspace/edev.hpp"
#include "graphspace/ensembles.hpp"
#include "graphspace/errors.hpp"
#include "graphspace/experiments.hpp"
#include "graphspace/fit.hpp"
#include "graphspace/graph_io.hpp"
#include "graphspace/model_spec.hpp"
#include "graphspace/permutation_test.hpp"

namespace {

using nlohmann::json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void write_output(const std::optional<std::string>& out, const std::string& text) {
  if (out) {
    std::ofstream f(*out, std::ios::binary);
    if (!f) throw graphspace::Error("cannot write " + *out);
    f << text;
  } else {
    std::cout << text;
  }
}

json report_to_json(const graphspace::TestReport& r) {
  json j;
  j["y"] = r.y;
  j["x"] = r.x;
  j["theta"] = r.theta;
  j["theta_stars"] = r.theta_stars;
  j["p_value"] = r.p_value;
  j["delta"] = r.delta;
  j["reject"] = r.reject;
  j["inner_samples"] = r.inner_samples;
  j["edev_method"] = r.edev_method;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric evaluation of statistical graph models: ensemble sampling,\n"
               "barycenters, entropies, edit-distance expected values, and the\n"
               "bootstrapped permutation test for model relevance."};
  app.require_subcommand(1);

  std::string spec_path;
  std::string graph_path;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  int samples = 100;
  int q = 200;
  double delta = 0.01;
  bool exact = false;

  auto* generate = app.add_subcommand("generate", "Sample one graph from a model");
  generate->add_option("--spec", spec_path, "Model spec JSON file")->required();
  generate->add_option("--seed", seed, "Master seed");
  generate->add_option("--out", out_path, "Output graph file (default stdout)");

  auto* bary = app.add_subcommand("barycenter", "Expected weight matrix of a model");
  bary->add_option("--spec", spec_path, "Model spec JSON file")->required();
  bary->add_option("--out", out_path, "Output graph file (default stdout)");

  auto* ent = app.add_subcommand("entropy", "Ensemble entropy in nats");
  ent->add_option("--spec", spec_path, "Model spec JSON file")->required();
  ent->add_option("--out", out_path, "Output JSON file (default stdout)");

  auto* edev_cmd = app.add_subcommand("edev", "Expected normalized edit distance to a model");
  edev_cmd->add_option("--graph", graph_path, "Observed graph file")->required();
  edev_cmd->add_option("--spec", spec_path, "Model spec JSON file")->required();
  edev_cmd->add_option("--samples", samples, "Monte-Carlo sample count")
      ->check(CLI::PositiveNumber);
  edev_cmd->add_option("--seed", seed, "Master seed");
  edev_cmd->add_flag("--exact", exact, "Closed-form evaluation (er and sbm only)");
  edev_cmd->add_option("--out", out_path, "Output JSON file (default stdout)");

  auto* test = app.add_subcommand("test", "Permutation test of model relevance");
  test->add_option("--graph", graph_path, "Observed graph file")->required();
  test->add_option("--spec", spec_path, "Candidate model spec JSON file")->required();
  test->add_option("--q", q, "Reference sample count")->check(CLI::PositiveNumber);
  test->add_option("--delta", delta, "Significance threshold");
  test->add_option("--samples", samples, "Monte-Carlo samples per EDEV when not exact")
      ->check(CLI::PositiveNumber);
  test->add_option("--seed", seed, "Master seed");
  test->add_option("--out", out_path, "Output JSON file (default stdout)");

  int blocks = 4;
  int restarts = 10;
  auto* part = app.add_subcommand("partition", "Greedy minimum-entropy block partition");
  part->add_option("--graph", graph_path, "Graph file")->required();
  part->add_option("--blocks", blocks, "Block count")->check(CLI::PositiveNumber);
  part->add_option("--restarts", restarts, "Local-search restarts")->check(CLI::PositiveNumber);
  part->add_option("--seed", seed, "Master seed");
  part->add_option("--out", out_path, "Output JSON file (default stdout)");

  std::string preset;
  std::string out_dir = ".";
  graphspace::ExperimentConfig exp_config;
  std::optional<int> exp_samples;
  std::optional<int> exp_q;
  std::optional<int> exp_graphs;
  auto* experiment = app.add_subcommand("experiment", "Run a preset study and write CSV files");
  experiment->add_option("preset", preset, "One of fig2, fig3, fig4, fig5, fig6, fig7")
      ->required();
  experiment->add_option("--out", out_dir, "Output directory");
  experiment->add_option("--seed", seed, "Master seed");
  experiment->add_option("--samples", exp_samples, "Samples per model / per EDEV")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--q", exp_q, "Permutation-test reference count")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--graphs", exp_graphs, "Replicates or graphs per model")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--scale", exp_config.scale, "Multiplier for unset sizes")
      ->check(CLI::PositiveNumber);
  experiment->add_flag("--svg", exp_config.svg, "Also write SVG renderings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    using namespace graphspace;
    if (generate->parsed()) {
      ModelSpec spec = load_spec(spec_path);
      Multigraph g = sample(spec, RngStream(seed));
      write_output(out_path, to_text(g));
    } else if (bary->parsed()) {
      ModelSpec spec = load_spec(spec_path);
      write_output(out_path, to_text(barycenter(spec)));
    } else if (ent->parsed()) {
      ModelSpec spec = load_spec(spec_path);
      EntropyResult r = entropy(spec);
      json j;
      j["entropy_nats"] = r.nats;
      j["approximate"] = r.approximate;
      write_output(out_path, j.dump(2) + "\n");
    } else if (edev_cmd->parsed()) {
      ModelSpec spec = load_spec(spec_path);
      Multigraph g = load_graph(graph_path);
      json j;
      if (exact) {
        j["mean"] = edev_exact(g, spec);
        j["std_error"] = 0.0;
        j["n_samples"] = 0;
        j["method"] = "exact";
      } else {
        EdevEstimate est = edev_mc(g, spec, samples, RngStream(seed));
        j["mean"] = est.mean;
        j["std_error"] = est.std_error;
        j["n_samples"] = est.n_samples;
        j["method"] = "mc";
      }
      write_output(out_path, j.dump(2) + "\n");
    } else if (test->parsed()) {
      ModelSpec spec = load_spec(spec_path);
      Multigraph g = load_graph(graph_path);
      TestReport r = permutation_test(g, spec, q, delta, RngStream(seed), samples);
      write_output(out_path, report_to_json(r).dump(2) + "\n");
    } else if (part->parsed()) {
      Multigraph g = load_graph(graph_path);
      Partition p = greedy_min_entropy_partition(g, blocks, restarts, RngStream(seed));
      EntropyResult r = entropy(ModelSpec(fit_sbm(g, p)));
      json j;
      j["block_of"] = p.assignments();
      j["p"] = p.block_count();
      j["entropy_nats"] = r.nats;
      write_output(out_path, j.dump(2) + "\n");
    } else if (experiment->parsed()) {
      exp_config.out_dir = out_dir;
      exp_config.seed = seed;
      exp_config.samples = exp_samples;
      exp_config.q = exp_q;
      exp_config.graphs = exp_graphs;
      auto files = run_experiment(preset, exp_config);
      for (const auto& f : files) std::cout << f.string() << "\n";
    }
  } catch (const graphspace::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const graphspace::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const graphspace::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const graphspace::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const graphspace::NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const graphspace::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
