#include "graphspace/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "graphspace/errors.hpp"

namespace graphspace {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

struct Token {
  const char* begin;
  const char* end;
};

// Splits a line on single spaces; empty tokens flag malformed input.
std::vector<Token> split_fields(const char* begin, const char* end) {
  std::vector<Token> out;
  const char* cur = begin;
  while (cur < end) {
    const char* field = cur;
    while (cur < end && *cur != ' ') ++cur;
    out.push_back({field, cur});
    if (cur < end) ++cur;
  }
  return out;
}

template <typename T>
bool parse_number(const Token& t, T& value) {
  auto res = std::from_chars(t.begin, t.end, value);
  return res.ec == std::errc() && res.ptr == t.end;
}

template <typename W, typename Graph>
Graph parse_graph(const std::string& text, const std::string& origin,
                  bool (*parse_weight)(const Token&, W&)) {
  std::size_t pos = 0;
  int line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    line = std::string_view(text).substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    return true;
  };

  std::string_view header;
  if (!next_line(header)) fail(origin, 1, "missing header line");
  long long n = 0;
  long long declared_m = 0;
  double declared_m_real = 0.0;
  bool integral = std::is_integral_v<W>;
  {
    auto fields = split_fields(header.data(), header.data() + header.size());
    auto has_prefix = [](const Token& t, char c) {
      return t.end - t.begin > 2 && t.begin[0] == c && t.begin[1] == '=';
    };
    if (fields.size() != 2 || !has_prefix(fields[0], 'n') || !has_prefix(fields[1], 'm'))
      fail(origin, line_no, "header must be 'n=<int> m=<count>'");
    Token n_tok{fields[0].begin + 2, fields[0].end};
    Token m_tok{fields[1].begin + 2, fields[1].end};
    if (!parse_number(n_tok, n) || n < 1) fail(origin, line_no, "invalid node count");
    if (integral) {
      if (!parse_number(m_tok, declared_m) || declared_m < 0)
        fail(origin, line_no, "invalid edge count");
    } else {
      if (!parse_number(m_tok, declared_m_real) || !(declared_m_real >= 0))
        fail(origin, line_no, "invalid total weight");
    }
  }

  std::vector<W> w(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), W{});
  std::string_view line;
  long long prev_cell = -1;
  while (next_line(line)) {
    if (line.empty()) fail(origin, line_no, "empty line");
    auto fields = split_fields(line.data(), line.data() + line.size());
    if (fields.size() != 3) fail(origin, line_no, "expected 'i j w'");
    long long i = 0;
    long long j = 0;
    W weight{};
    if (!parse_number(fields[0], i)) fail(origin, line_no, "malformed node index");
    if (!parse_number(fields[1], j)) fail(origin, line_no, "malformed node index");
    if (!parse_weight(fields[2], weight)) fail(origin, line_no, "malformed weight");
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(origin, line_no, "node index out of range [0, " + std::to_string(n) + ")");
    if (!(weight >= W{})) fail(origin, line_no, "negative weight");
    long long cell = i * n + j;
    if (cell <= prev_cell) fail(origin, line_no, "entries must be unique and in row-major order");
    prev_cell = cell;
    w[static_cast<std::size_t>(cell)] = weight;
  }

  Graph g(static_cast<int>(n), std::move(w));
  if (integral) {
    if (static_cast<long long>(g.total_weight()) != declared_m)
      fail(origin, line_no, "declared m does not match the sum of weights");
  } else {
    double total = static_cast<double>(g.total_weight());
    double tol = 1e-9 * std::max(1.0, std::abs(declared_m_real));
    if (std::abs(total - declared_m_real) > tol)
      fail(origin, line_no, "declared m does not match the sum of weights");
  }
  return g;
}

bool parse_int_weight(const Token& t, Weight& value) { return parse_number(t, value); }

bool parse_real_weight(const Token& t, double& value) {
  return parse_number(t, value) && std::isfinite(value);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::string to_text(const Multigraph& g) {
  std::string out = "n=" + std::to_string(g.node_count()) +
                    " m=" + std::to_string(g.total_weight()) + "\n";
  int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Weight w = g.weight(i, j);
      if (w != 0)
        out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(w) + "\n";
    }
  }
  return out;
}

std::string to_text(const RealGraph& g) {
  std::string out = "n=" + std::to_string(g.node_count()) +
                    " m=" + format_double(g.total_weight()) + "\n";
  int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double w = g.weight(i, j);
      if (w != 0.0)
        out += std::to_string(i) + " " + std::to_string(j) + " " + format_double(w) + "\n";
    }
  }
  return out;
}

Multigraph multigraph_from_text(const std::string& text, const std::string& origin) {
  return parse_graph<Weight, Multigraph>(text, origin, parse_int_weight);
}

RealGraph real_graph_from_text(const std::string& text, const std::string& origin) {
  return parse_graph<double, RealGraph>(text, origin, parse_real_weight);
}

void save_graph(const Multigraph& g, const std::filesystem::path& path) {
  write_file(path, to_text(g));
}

void save_graph(const RealGraph& g, const std::filesystem::path& path) {
  write_file(path, to_text(g));
}

Multigraph load_graph(const std::filesystem::path& path) {
  return multigraph_from_text(read_file(path), path.string());
}

RealGraph load_real_graph(const std::filesystem::path& path) {
  return real_graph_from_text(read_file(path), path.string());
}

}  // namespace graphspace
