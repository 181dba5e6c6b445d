#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flood/graph.hpp"

namespace flood {

struct InstanceFile {
  ColoredGraph graph;
  std::optional<Vertex> source;
};

// {"vertices": n, "colors": [...], "edges": [[u, v], ...], "source": s?}
// with u < v, no duplicates, colours dense in 0..k-1. Throws InvalidInput
// whose message names the offending field (or byte offset for syntax errors).
InstanceFile parse_json(std::string_view text);
std::string emit_json(const ColoredGraph& g, std::optional<Vertex> source = std::nullopt);

// Rectangular digit matrix, one row per line; vertex r*cols+c, 4-adjacency.
// Digits become colours after densification. Trailing CR and a final empty
// line are tolerated.
ColoredGraph parse_grid(std::string_view text);

enum class FileFormat { Json, Grid };

// By extension: .grid is Grid, anything else Json.
FileFormat infer_format(const std::string& path);
// Throws InvalidInput on unknown names.
FileFormat parse_format(const std::string& name);

InstanceFile read_instance(const std::string& path, std::optional<FileFormat> format = std::nullopt);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace flood
