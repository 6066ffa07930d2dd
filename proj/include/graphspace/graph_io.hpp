#pragma once

#include <filesystem>
#include <string>

#include "graphspace/types.hpp"

namespace graphspace {

// Graph text format: UTF-8, first line "n=<int> m=<int>", then one line per
// nonzero entry "i j w" (0-based, space-separated), entries in row-major
// order on save. Real-valued graphs use the same layout with decimal
// weights (shortest round-trip representation).

std::string to_text(const Multigraph& g);
std::string to_text(const RealGraph& g);

Multigraph multigraph_from_text(const std::string& text, const std::string& origin = "<string>");
RealGraph real_graph_from_text(const std::string& text, const std::string& origin = "<string>");

void save_graph(const Multigraph& g, const std::filesystem::path& path);
void save_graph(const RealGraph& g, const std::filesystem::path& path);

Multigraph load_graph(const std::filesystem::path& path);
RealGraph load_real_graph(const std::filesystem::path& path);

}  // namespace graphspace
