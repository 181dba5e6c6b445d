#include "flood/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "flood/error.hpp"
#include "json.hpp"

namespace flood {

namespace {

using nlohmann::json;

std::size_t get_index(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InvalidInput(field + ": expected a non-negative integer");
  if (j.get<long long>() < 0) throw InvalidInput(field + ": must be non-negative");
  return j.get<std::size_t>();
}

}  // namespace

InstanceFile parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("top level: expected an object");
  for (const char* key : {"vertices", "colors", "edges"})
    if (!doc.contains(key)) throw InvalidInput(std::string(key) + ": missing");

  const std::size_t n = get_index(doc["vertices"], "vertices");

  const json& jc = doc["colors"];
  if (!jc.is_array()) throw InvalidInput("colors: expected an array");
  if (jc.size() != n)
    throw InvalidInput("colors: length " + std::to_string(jc.size()) + " but vertices = " + std::to_string(n));
  std::vector<Color> colors;
  std::set<Color> used;
  for (std::size_t i = 0; i < n; ++i) {
    colors.push_back(static_cast<Color>(get_index(jc[i], "colors[" + std::to_string(i) + "]")));
    used.insert(colors.back());
  }
  if (!used.empty() && *used.rbegin() + 1 != used.size())
    throw InvalidInput("colors: ids must be dense 0..k-1, found max " + std::to_string(*used.rbegin()) + " with " +
                       std::to_string(used.size()) + " distinct");

  const json& je = doc["edges"];
  if (!je.is_array()) throw InvalidInput("edges: expected an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) throw InvalidInput(field + ": expected [u, v]");
    const std::size_t u = get_index(je[i][0], field + "[0]");
    const std::size_t v = get_index(je[i][1], field + "[1]");
    if (u >= n || v >= n) throw InvalidInput(field + ": vertex out of range");
    if (u >= v) throw InvalidInput(field + ": expected u < v");
    if (!seen.insert({static_cast<Vertex>(u), static_cast<Vertex>(v)}).second)
      throw InvalidInput(field + ": duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  InstanceFile out{ColoredGraph(n, edges, std::move(colors)), std::nullopt};
  if (doc.contains("source") && !doc["source"].is_null()) {
    const std::size_t s = get_index(doc["source"], "source");
    if (s >= n) throw InvalidInput("source: vertex out of range");
    out.source = static_cast<Vertex>(s);
  }
  return out;
}

std::string emit_json(const ColoredGraph& g, std::optional<Vertex> source) {
  json doc;
  doc["vertices"] = g.n();
  doc["colors"] = g.colors();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (source) doc["source"] = *source;
  return doc.dump() + "\n";
}

ColoredGraph parse_grid(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream in{std::string(text)};
  while (std::getline(in, cur)) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw InvalidInput("grid: no rows");

  const std::size_t rows = lines.size(), cols = lines.front().size();
  if (cols == 0) throw InvalidInput("grid: row 1 is empty");
  std::vector<Color> colors;
  for (std::size_t r = 0; r < rows; ++r) {
    if (lines[r].size() != cols)
      throw InvalidInput("grid: row " + std::to_string(r + 1) + " has " + std::to_string(lines[r].size()) +
                         " cells, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch < '0' || ch > '9')
        throw InvalidInput("grid: row " + std::to_string(r + 1) + " column " + std::to_string(c + 1) +
                           ": not a digit");
      colors.push_back(static_cast<Color>(ch - '0'));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  return ColoredGraph(rows * cols, edges, densify_colors(colors).first);
}

FileFormat infer_format(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".grid") == 0 ? FileFormat::Grid : FileFormat::Json;
}

FileFormat parse_format(const std::string& name) {
  if (name == "json") return FileFormat::Json;
  if (name == "grid") return FileFormat::Grid;
  throw InvalidInput("unknown format '" + name + "' (expected json or grid)");
}

InstanceFile read_instance(const std::string& path, std::optional<FileFormat> format) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  if (format.value_or(infer_format(path)) == FileFormat::Grid) return {parse_grid(buf.str()), std::nullopt};
  return parse_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
  if (!f) throw InvalidInput("write failed for " + path);
}

}  // namespace flood
