// Edge-list text format:
//   line 1:      "n m"
//   lines 2..m+1: "u v"   (0-based, written in ascending (u, v) order, LF)
// Optional companion frequency file: m lines, one probability per edge,
// same edge order as the graph file.
#pragma once

#include <filesystem>
#include <iosfwd>

#include "myopia/graph.hpp"

namespace myopia {

Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

FrequencyModel read_frequencies(const std::filesystem::path& path, const Graph& g);
void write_frequencies(std::ostream& out, const FrequencyModel& freq);
void write_frequencies(const std::filesystem::path& path, const FrequencyModel& freq);

}  // namespace myopia
