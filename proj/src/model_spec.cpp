#include "graphspace/model_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "graphspace/errors.hpp"

namespace graphspace {

using nlohmann::json;

double deterrence_at(const Deterrence& f, double d) {
  return std::visit(
      [&](const auto& fn) -> double {
        using T = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<T, ExponentialDeterrence>) {
          return fn.c * std::exp(-d / fn.r);
        } else {
          const auto& xs = fn.distance;
          const auto& ys = fn.value;
          if (d <= xs.front()) return ys.front();
          if (d >= xs.back()) return ys.back();
          auto it = std::upper_bound(xs.begin(), xs.end(), d);
          std::size_t hi = static_cast<std::size_t>(it - xs.begin());
          std::size_t lo = hi - 1;
          double t = (d - xs[lo]) / (xs[hi] - xs[lo]);
          return ys[lo] + t * (ys[hi] - ys[lo]);
        }
      },
      f);
}

namespace {

void check_positions(const std::vector<Point>& pos, bool unit_square) {
  for (const auto& p : pos) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw SpecError("positions must be finite");
    if (unit_square && (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0))
      throw SpecError("positions must lie in [0,1]^2");
  }
}

void check_strengths(const std::vector<double>& k, const char* label) {
  for (double v : k)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw SpecError(std::string(label) + " strengths must be non-negative");
}

}  // namespace

void validate(const ModelSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          if (s.n < 1) throw SpecError("er: n must be >= 1");
          if (s.m < 0) throw SpecError("er: m must be >= 0");
        } else if constexpr (std::is_same_v<T, CfmdSpec>) {
          const auto& d = s.degrees;
          if (d.k_out.empty() || d.k_out.size() != d.k_in.size())
            throw SpecError("cfmd: k_out and k_in must be non-empty and equal length");
          Weight out_sum = 0;
          Weight in_sum = 0;
          for (Weight k : d.k_out) {
            if (k < 0) throw SpecError("cfmd: degrees must be non-negative");
            out_sum += k;
          }
          for (Weight k : d.k_in) {
            if (k < 0) throw SpecError("cfmd: degrees must be non-negative");
            in_sum += k;
          }
          if (out_sum != in_sum) throw SpecError("cfmd: sum(k_out) must equal sum(k_in)");
        } else if constexpr (std::is_same_v<T, SbmSpec>) {
          int p = s.blocks.block_count();
          if (s.block_matrix.size() != static_cast<std::size_t>(p) * p)
            throw SpecError("sbm: block matrix must be p x p");
          for (Weight w : s.block_matrix)
            if (w < 0) throw SpecError("sbm: block matrix entries must be >= 0");
        } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
          if (s.n < 1) throw SpecError("waxman: n must be >= 1");
          if (!(s.alpha > 0.0)) throw SpecError("waxman: alpha must be > 0");
          // The reference parameter sets include amplitudes above 1; the
          // connection probability is clamped at 1 in that regime.
          if (!(s.beta > 0.0)) throw SpecError("waxman: beta must be > 0");
          if (s.positions) {
            if (static_cast<int>(s.positions->size()) != s.n)
              throw SpecError("waxman: positions must list one point per node");
            check_positions(*s.positions, true);
          }
        } else if constexpr (std::is_same_v<T, GravitySpec>) {
          std::size_t n = s.positions.size();
          if (n == 0) throw SpecError("gravity: positions required");
          if (s.k_out.size() != n || s.k_in.size() != n)
            throw SpecError("gravity: strengths must list one value per node");
          check_positions(s.positions, false);
          check_strengths(s.k_out, "gravity");
          check_strengths(s.k_in, "gravity");
          std::visit(
              [](const auto& f) {
                using F = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<F, ExponentialDeterrence>) {
                  if (!(f.r > 0.0)) throw SpecError("gravity: deterrence scale must be > 0");
                } else {
                  if (f.distance.size() < 2 || f.distance.size() != f.value.size())
                    throw SpecError("gravity: deterrence table needs >= 2 matched knots");
                  if (!std::is_sorted(f.distance.begin(), f.distance.end()))
                    throw SpecError("gravity: deterrence distances must be sorted");
                }
              },
              s.deterrence);
        } else if constexpr (std::is_same_v<T, RadiationSpec>) {
          std::size_t n = s.positions.size();
          if (n == 0) throw SpecError("radiation: positions required");
          if (s.k_out.size() != n || s.k_in.size() != n)
            throw SpecError("radiation: strengths must list one value per node");
          check_positions(s.positions, false);
          check_strengths(s.k_out, "radiation");
          check_strengths(s.k_in, "radiation");
        }
      },
      spec);
}

int node_count(const ModelSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) return s.n;
        else if constexpr (std::is_same_v<T, CfmdSpec>) return static_cast<int>(s.degrees.k_out.size());
        else if constexpr (std::is_same_v<T, SbmSpec>) return s.blocks.node_count();
        else if constexpr (std::is_same_v<T, WaxmanSpec>) return s.n;
        else return static_cast<int>(s.positions.size());
      },
      spec);
}

std::optional<Weight> fixed_total_weight(const ModelSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::optional<Weight> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          return s.m;
        } else if constexpr (std::is_same_v<T, CfmdSpec>) {
          return std::accumulate(s.degrees.k_out.begin(), s.degrees.k_out.end(), Weight{0});
        } else if constexpr (std::is_same_v<T, SbmSpec>) {
          return std::accumulate(s.block_matrix.begin(), s.block_matrix.end(), Weight{0});
        } else {
          return std::nullopt;
        }
      },
      spec);
}

std::string model_name(const ModelSpec& spec) {
  static const char* names[] = {"er", "cfmd", "sbm", "waxman", "gravity", "radiation"};
  return names[spec.index()];
}

bool has_sampler(const ModelSpec& spec) {
  return spec.index() <= 3;  // er, cfmd, sbm, waxman
}

SbmSpec scale_sbm(const SbmSpec& spec, Weight k) {
  if (k < 1) throw DomainError("sbm scale factor must be >= 1");
  SbmSpec out = spec;
  for (Weight& w : out.block_matrix) w *= k;
  return out;
}

namespace {

std::vector<Point> points_from_json(const json& arr) {
  std::vector<Point> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw SpecError("positions must be an array of [x, y] pairs");
    out.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

const json& need(const json& j, const char* key, const char* model) {
  auto it = j.find(key);
  if (it == j.end())
    throw SpecError(std::string(model) + " spec requires field '" + key + "'");
  return *it;
}

}  // namespace

ModelSpec spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("invalid spec JSON: ") + e.what());
  }
  ModelSpec spec;
  try {
    if (!j.is_object()) throw SpecError("spec must be a JSON object");
    std::string model = need(j, "model", "model").get<std::string>();
    if (model == "er") {
      spec = ErSpec{need(j, "n", "er").get<int>(), need(j, "m", "er").get<Weight>()};
    } else if (model == "cfmd") {
      DegreeSequence d;
      d.k_out = need(j, "k_out", "cfmd").get<std::vector<Weight>>();
      d.k_in = need(j, "k_in", "cfmd").get<std::vector<Weight>>();
      spec = CfmdSpec{std::move(d)};
    } else if (model == "sbm") {
      auto block_of = need(j, "block_of", "sbm").get<std::vector<int>>();
      auto rows = need(j, "M", "sbm").get<std::vector<std::vector<Weight>>>();
      int p = static_cast<int>(rows.size());
      std::vector<Weight> flat;
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != p) throw SpecError("sbm: M must be square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      spec = SbmSpec{Partition(std::move(block_of), p), std::move(flat)};
    } else if (model == "waxman") {
      WaxmanSpec w;
      w.n = need(j, "n", "waxman").get<int>();
      w.alpha = need(j, "alpha", "waxman").get<double>();
      w.beta = need(j, "beta", "waxman").get<double>();
      if (j.contains("positions")) w.positions = points_from_json(j["positions"]);
      spec = std::move(w);
    } else if (model == "gravity") {
      GravitySpec g;
      g.positions = points_from_json(need(j, "positions", "gravity"));
      g.k_out = need(j, "k_out", "gravity").get<std::vector<double>>();
      g.k_in = need(j, "k_in", "gravity").get<std::vector<double>>();
      const json& f = need(j, "deterrence", "gravity");
      std::string type = need(f, "type", "deterrence").get<std::string>();
      if (type == "exponential") {
        g.deterrence = ExponentialDeterrence{need(f, "c", "deterrence").get<double>(),
                                             need(f, "r", "deterrence").get<double>()};
      } else if (type == "table") {
        g.deterrence = TabulatedDeterrence{need(f, "d", "deterrence").get<std::vector<double>>(),
                                           need(f, "f", "deterrence").get<std::vector<double>>()};
      } else {
        throw SpecError("deterrence type must be 'exponential' or 'table'");
      }
      spec = std::move(g);
    } else if (model == "radiation") {
      RadiationSpec r;
      r.positions = points_from_json(need(j, "positions", "radiation"));
      r.k_out = need(j, "k_out", "radiation").get<std::vector<double>>();
      r.k_in = need(j, "k_in", "radiation").get<std::vector<double>>();
      spec = std::move(r);
    } else {
      throw SpecError("unknown model '" + model + "'");
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("invalid spec JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw SpecError(e.what());
  } catch (const DimensionError& e) {
    throw SpecError(e.what());
  }
  validate(spec);
  return spec;
}

ModelSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open spec file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return spec_from_json(ss.str());
}

std::string spec_to_json(const ModelSpec& spec) {
  json j;
  j["model"] = model_name(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          j["n"] = s.n;
          j["m"] = s.m;
        } else if constexpr (std::is_same_v<T, CfmdSpec>) {
          j["k_out"] = s.degrees.k_out;
          j["k_in"] = s.degrees.k_in;
        } else if constexpr (std::is_same_v<T, SbmSpec>) {
          j["block_of"] = s.blocks.assignments();
          int p = s.blocks.block_count();
          json rows = json::array();
          for (int r = 0; r < p; ++r) {
            json row = json::array();
            for (int c = 0; c < p; ++c) row.push_back(s.block_weight(r, c));
            rows.push_back(std::move(row));
          }
          j["M"] = std::move(rows);
        } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
          j["n"] = s.n;
          j["alpha"] = s.alpha;
          j["beta"] = s.beta;
          if (s.positions) j["positions"] = points_to_json(*s.positions);
        } else if constexpr (std::is_same_v<T, GravitySpec>) {
          j["positions"] = points_to_json(s.positions);
          j["k_out"] = s.k_out;
          j["k_in"] = s.k_in;
          json f;
          if (const auto* e = std::get_if<ExponentialDeterrence>(&s.deterrence)) {
            f["type"] = "exponential";
            f["c"] = e->c;
            f["r"] = e->r;
          } else {
            const auto& t = std::get<TabulatedDeterrence>(s.deterrence);
            f["type"] = "table";
            f["d"] = t.distance;
            f["f"] = t.value;
          }
          j["deterrence"] = std::move(f);
        } else if constexpr (std::is_same_v<T, RadiationSpec>) {
          j["positions"] = points_to_json(s.positions);
          j["k_out"] = s.k_out;
          j["k_in"] = s.k_in;
        }
      },
      spec);
  return j.dump(2) + "\n";
}

}  // namespace graphspace
