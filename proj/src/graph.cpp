#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "lpa/errors.hpp"

namespace lpa {

int Graph::index_of(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i] == name) return i;
  throw SemanticError("unknown vertex name: " + name);
}

bool Graph::is_sink(int v) const {
  for (std::int64_t x : adjacency[v])
    if (x != 0) return false;
  return true;
}

bool Graph::is_source(int v) const {
  for (const auto& row : adjacency)
    if (row[v] != 0) return false;
  return true;
}

bool Graph::has_sink() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) return true;
  return false;
}

std::int64_t Graph::out_degree(int v) const {
  std::int64_t d = 0;
  for (std::int64_t x : adjacency[v]) d += x;
  return d;
}

std::int64_t Graph::in_degree(int v) const {
  std::int64_t d = 0;
  for (const auto& row : adjacency) d += row[v];
  return d;
}

Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::vector<std::int64_t>> adjacency) {
  const std::size_t h = vertices.size();
  if (h == 0) throw ParseError("graph must have at least one vertex");
  std::unordered_set<std::string> seen;
  for (const auto& name : vertices) {
    if (name.empty()) throw ParseError("empty vertex name");
    if (!seen.insert(name).second)
      throw ParseError("duplicate vertex name: " + name);
  }
  if (adjacency.size() != h)
    throw ParseError("adjacency matrix has wrong number of rows");
  for (const auto& row : adjacency) {
    if (row.size() != h)
      throw ParseError("adjacency matrix has wrong number of columns");
    for (std::int64_t x : row)
      if (x < 0) throw ParseError("negative edge multiplicity");
  }
  return Graph{std::move(vertices), std::move(adjacency)};
}

VertexSet vertex_set_of_names(const Graph& g,
                              const std::vector<std::string>& names) {
  std::set<int> idx;
  for (const auto& name : names) idx.insert(g.index_of(name));
  return VertexSet(idx.begin(), idx.end());
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool sink = g.is_sink(v);
    const bool source = g.is_source(v);
    if (sink) c.sinks.push_back(v); else c.regular.push_back(v);
    if (source) c.sources.push_back(v);
    if (sink && source) c.isolated.push_back(v);
  }
  return c;
}

bool reaches(const Graph& g, int v, int w) {
  if (v == w) return true;
  std::vector<bool> visited(g.vertex_count(), false);
  std::deque<int> queue{v};
  visited[v] = true;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int next = 0; next < g.vertex_count(); ++next) {
      if (g.adjacency[cur][next] == 0 || visited[next]) continue;
      if (next == w) return true;
      visited[next] = true;
      queue.push_back(next);
    }
  }
  return false;
}

bool reaches(const Graph& g, const std::string& v, const std::string& w) {
  return reaches(g, g.index_of(v), g.index_of(w));
}

int Condensation::component_of(int vertex) const {
  return component_index[vertex];
}

namespace {

// Iterative Tarjan; emits SCCs in reverse topological order.
struct TarjanState {
  const Graph& g;
  std::vector<int> index, lowlink, on_stack;
  std::vector<int> stack;
  int counter = 0;
  std::vector<std::vector<int>> sccs;

  explicit TarjanState(const Graph& graph)
      : g(graph),
        index(graph.vertex_count(), -1),
        lowlink(graph.vertex_count(), 0),
        on_stack(graph.vertex_count(), 0) {}

  void run(int root) {
    struct Frame {
      int v;
      int next;
    };
    std::vector<Frame> frames{{root, 0}};
    visit(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int h = g.vertex_count();
      bool descended = false;
      while (f.next < h) {
        int w = f.next++;
        if (g.adjacency[f.v][w] == 0) continue;
        if (index[w] == -1) {
          visit(w);
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[f.v] = std::min(lowlink[f.v], index[w]);
      }
      if (descended) continue;
      if (lowlink[f.v] == index[f.v]) {
        std::vector<int> scc;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc.push_back(w);
        } while (w != f.v);
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
      }
      int v = f.v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
    }
  }

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
  }
};

}  // namespace

Condensation condensation(const Graph& g) {
  TarjanState state(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (state.index[v] == -1) state.run(v);
  std::reverse(state.sccs.begin(), state.sccs.end());

  Condensation c;
  c.components = std::move(state.sccs);
  c.component_index.assign(g.vertex_count(), -1);
  for (int ci = 0; ci < static_cast<int>(c.components.size()); ++ci)
    for (int v : c.components[ci]) c.component_index[v] = ci;

  std::set<std::pair<int, int>> dag;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w = 0; w < g.vertex_count(); ++w)
      if (g.adjacency[u][w] != 0 && c.component_index[u] != c.component_index[w])
        dag.insert({c.component_index[u], c.component_index[w]});
  c.dag_edges.assign(dag.begin(), dag.end());

  for (const auto& comp : c.components) {
    bool any_edge = false;
    bool all_degree_one = true;
    for (int u : comp) {
      std::int64_t within = 0;
      for (int w : comp) within += g.adjacency[u][w];
      if (within != 0) any_edge = true;
      if (within != 1) all_degree_one = false;
    }
    c.cyclic.push_back(any_edge);
    c.simple_cycle.push_back(any_edge && all_degree_one);
  }
  return c;
}

MaximalSinksAndCycles maximal_sinks_and_cycles(const Graph& g) {
  const Condensation c = condensation(g);
  const int n = static_cast<int>(c.components.size());

  // Reflexive-transitive reachability between components.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  // Components arrive topologically sorted, so a reverse sweep suffices.
  for (int i = n - 1; i >= 0; --i)
    for (const auto& [a, b] : c.dag_edges)
      if (a == i)
        for (int j = 0; j < n; ++j)
          if (reach[b][j]) reach[i][j] = true;

  MaximalSinksAndCycles out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_sink(v)) continue;
    bool reached_by_cycle = false;
    for (int ci = 0; ci < n && !reached_by_cycle; ++ci)
      if (c.cyclic[ci] && reach[ci][c.component_index[v]])
        reached_by_cycle = true;
    if (!reached_by_cycle) out.maximal_sinks.push_back(v);
  }
  for (int ci = 0; ci < n; ++ci) {
    if (!c.simple_cycle[ci]) continue;
    bool reached_by_other = false;
    for (int cj = 0; cj < n && !reached_by_other; ++cj)
      if (cj != ci && c.cyclic[cj] && reach[cj][ci]) reached_by_other = true;
    if (!reached_by_other) out.maximal_cycle_components.push_back(ci);
  }
  return out;
}

Graph covering_window(const Graph& g, int lo, int hi) {
  if (lo > hi) throw SemanticError("covering window: lo > hi");
  const int h = g.vertex_count();
  const int levels = hi - lo + 1;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(h) * levels);
  for (int a = lo; a <= hi; ++a)
    for (int v = 0; v < h; ++v)
      names.push_back(g.vertices[v] + "@" + std::to_string(a));
  std::vector<std::vector<std::int64_t>> adj(
      names.size(), std::vector<std::int64_t>(names.size(), 0));
  for (int a = lo; a < hi; ++a) {
    const int base = (a - lo) * h;
    for (int v = 0; v < h; ++v)
      for (int w = 0; w < h; ++w)
        adj[base + v][base + h + w] = g.adjacency[v][w];
  }
  return make_graph(std::move(names), std::move(adj));
}

Graph cartesian_product(const Graph& e, const Graph& f) {
  const int he = e.vertex_count(), hf = f.vertex_count();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(he) * hf);
  for (int u = 0; u < he; ++u)
    for (int v = 0; v < hf; ++v)
      names.push_back(e.vertices[u] + "," + f.vertices[v]);
  const auto id = [hf](int u, int v) { return u * hf + v; };
  std::vector<std::vector<std::int64_t>> adj(
      names.size(), std::vector<std::int64_t>(names.size(), 0));
  for (int u = 0; u < he; ++u)
    for (int v = 0; v < hf; ++v) {
      for (int u2 = 0; u2 < he; ++u2)
        adj[id(u, v)][id(u2, v)] += e.adjacency[u][u2];
      for (int v2 = 0; v2 < hf; ++v2)
        adj[id(u, v)][id(u, v2)] += f.adjacency[v][v2];
    }
  return make_graph(std::move(names), std::move(adj));
}

HsCheck hs_check(const Graph& g, const VertexSet& h) {
  std::vector<bool> in_h(g.vertex_count(), false);
  for (int v : h) {
    if (v < 0 || v >= g.vertex_count())
      throw SemanticError("vertex index out of range");
    in_h[v] = true;
  }

  bool hereditary = true;
  for (int v = 0; v < g.vertex_count() && hereditary; ++v) {
    if (!in_h[v]) continue;
    for (int w = 0; w < g.vertex_count(); ++w)
      if (g.adjacency[v][w] != 0 && !in_h[w]) {
        hereditary = false;
        break;
      }
  }

  bool saturated = true;
  for (int v = 0; v < g.vertex_count() && saturated; ++v) {
    if (g.is_sink(v) || in_h[v]) continue;
    bool ranges_in_h = true;
    for (int w = 0; w < g.vertex_count(); ++w)
      if (g.adjacency[v][w] != 0 && !in_h[w]) {
        ranges_in_h = false;
        break;
      }
    if (ranges_in_h) saturated = false;
  }
  return {hereditary, saturated};
}

std::vector<VertexSet> hs_enumerate(const Graph& g, int max_vertices) {
  const int h = g.vertex_count();
  if (h > max_vertices)
    throw SemanticError("hereditary saturated enumeration capped at " +
                        std::to_string(max_vertices) + " vertices (graph has " +
                        std::to_string(h) + ")");
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
    VertexSet s;
    for (int v = 0; v < h; ++v)
      if (mask & (1u << v)) s.push_back(v);
    auto [hereditary, saturated] = hs_check(g, s);
    if (hereditary && saturated) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Graph quotient(const Graph& g, const VertexSet& h) {
  auto [hereditary, saturated] = hs_check(g, h);
  if (!hereditary)
    throw SemanticError("quotient: subset is not hereditary");
  if (!saturated)
    throw SemanticError("quotient: subset is hereditary but not saturated");
  if (static_cast<int>(h.size()) == g.vertex_count())
    throw SemanticError("quotient: subset is the whole vertex set");

  std::vector<bool> in_h(g.vertex_count(), false);
  for (int v : h) in_h[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_h[v]) keep.push_back(v);

  std::vector<std::string> names;
  for (int v : keep) names.push_back(g.vertices[v]);
  std::vector<std::vector<std::int64_t>> adj(
      keep.size(), std::vector<std::int64_t>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      adj[i][j] = g.adjacency[keep[i]][keep[j]];
  return make_graph(std::move(names), std::move(adj));
}

}  // namespace lpa
