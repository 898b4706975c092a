#include "lpa/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t parse_multiplicity(const std::string& tok) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("invalid edge multiplicity: " + tok);
  }
  if (pos != tok.size() || value <= 0)
    throw ParseError("edge multiplicity must be a positive integer: " + tok);
  return value;
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::int64_t>> adj;
  bool have_vertices = false;

  while (std::getline(in, line)) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "vertices") {
      if (have_vertices) throw ParseError("duplicate vertices line");
      vertices.assign(tokens.begin() + 1, tokens.end());
      for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        index[vertices[i]] = i;
      adj.assign(vertices.size(),
                 std::vector<std::int64_t>(vertices.size(), 0));
      have_vertices = true;
    } else if (tokens[0] == "edge") {
      if (!have_vertices)
        throw ParseError("edge line before vertices line");
      if (tokens.size() < 3 || tokens.size() > 4)
        throw ParseError("edge line needs: edge <src> <dst> [mult]");
      auto src = index.find(tokens[1]);
      auto dst = index.find(tokens[2]);
      if (src == index.end())
        throw ParseError("edge references unknown vertex: " + tokens[1]);
      if (dst == index.end())
        throw ParseError("edge references unknown vertex: " + tokens[2]);
      std::int64_t mult = tokens.size() == 4 ? parse_multiplicity(tokens[3]) : 1;
      adj[src->second][dst->second] += mult;
    } else {
      throw ParseError("unrecognized line: " + line);
    }
  }
  if (!have_vertices) throw ParseError("missing vertices line");
  return make_graph(std::move(vertices), std::move(adj));
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph JSON needs a \"vertices\" array");
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    index[v.get<std::string>()] = static_cast<int>(vertices.size());
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::vector<std::int64_t>> adj(
      vertices.size(), std::vector<std::int64_t>(vertices.size(), 0));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ParseError("each edge must be [src, dst] or [src, dst, mult]");
      if (!e[0].is_string() || !e[1].is_string())
        throw ParseError("edge endpoints must be vertex names");
      auto src = index.find(e[0].get<std::string>());
      auto dst = index.find(e[1].get<std::string>());
      if (src == index.end() || dst == index.end())
        throw ParseError("edge references unknown vertex");
      std::int64_t mult = 1;
      if (e.size() == 3) {
        if (!e[2].is_number_integer() || e[2].get<std::int64_t>() <= 0)
          throw ParseError("edge multiplicity must be a positive integer");
        mult = e[2].get<std::int64_t>();
      }
      adj[src->second][dst->second] += mult;
    }
  }
  return make_graph(std::move(vertices), std::move(adj));
}

Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  throw ParseError("empty graph input");
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "vertices";
  for (const auto& v : g.vertices) out << ' ' << v;
  out << '\n';
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j)
      if (g.adjacency[i][j] != 0)
        out << "edge " << g.vertices[i] << ' ' << g.vertices[j] << ' '
            << g.adjacency[i][j] << '\n';
  return out.str();
}

std::string write_graph_dot(const Graph& g) {
  std::ostringstream out;
  out << "digraph g {\n";
  for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j)
      if (g.adjacency[i][j] != 0)
        out << "  \"" << g.vertices[i] << "\" -> \"" << g.vertices[j]
            << "\" [label=\"" << g.adjacency[i][j] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lpa
