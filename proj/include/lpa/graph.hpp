#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

// Finite directed multigraph. Parallel edges are stored as multiplicities in
// the adjacency matrix: adjacency[i][j] is the number of edges from vertex i
// to vertex j. Vertex order is the declaration order of the input and fixes
// every matrix, report and enumeration order downstream.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::int64_t>> adjacency;

  int vertex_count() const { return static_cast<int>(vertices.size()); }

  // Index lookup by name; throws SemanticError for unknown names.
  int index_of(const std::string& name) const;

  bool is_sink(int v) const;     // row v all zero
  bool is_source(int v) const;   // column v all zero
  bool is_regular(int v) const { return !is_sink(v); }
  bool has_sink() const;

  std::int64_t out_degree(int v) const;
  std::int64_t in_degree(int v) const;

  bool operator==(const Graph&) const = default;
};

// Validates and constructs a Graph: at least one vertex, unique nonempty
// names, square matrix of nonnegative entries.
Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::vector<std::int64_t>> adjacency);

// Subset of vertex indices; kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

VertexSet vertex_set_of_names(const Graph& g,
                              const std::vector<std::string>& names);

struct VertexClassification {
  VertexSet sinks;
  VertexSet sources;
  VertexSet regular;
  VertexSet isolated;
};

VertexClassification classify_vertices(const Graph& g);

// True iff a (possibly empty) path from v to w exists.
bool reaches(const Graph& g, int v, int w);
bool reaches(const Graph& g, const std::string& v, const std::string& w);

// SCC condensation. Components are listed in topological order (sources of
// the condensation DAG first); vertex lists inside a component are sorted.
struct Condensation {
  std::vector<VertexSet> components;
  std::vector<std::pair<int, int>> dag_edges;  // between component indices
  std::vector<bool> cyclic;       // component induces at least one edge
  std::vector<bool> simple_cycle; // cyclic and every within-degree is 1

  int component_of(int vertex) const;

  std::vector<int> component_index;  // vertex -> component
};

Condensation condensation(const Graph& g);

// A sink is maximal when no cyclic component reaches it; a component is a
// maximal cycle when it is a simple cycle no other cyclic component reaches.
struct MaximalSinksAndCycles {
  VertexSet maximal_sinks;
  std::vector<int> maximal_cycle_components;

  bool empty() const {
    return maximal_sinks.empty() && maximal_cycle_components.empty();
  }
};

MaximalSinksAndCycles maximal_sinks_and_cycles(const Graph& g);

// Finite window of the covering graph on levels lo..hi: vertices (v, a) named
// "v@a", one edge bundle (v,a) -> (w,a+1) of multiplicity adjacency[v][w] for
// each a in [lo, hi).
Graph covering_window(const Graph& g, int lo, int hi);

// Cartesian product: vertex set E0 x F0 (named "u,v"), edge multiplicity
// from (u,v) to (u',v') is A_E(u,u') when v = v' plus A_F(v,v') when u = u'.
Graph cartesian_product(const Graph& e, const Graph& f);

struct HsCheck {
  bool hereditary;
  bool saturated;
};

// hereditary: every edge with source in h has its range in h.
// saturated: every regular vertex whose out-neighbours all lie in h is in h.
HsCheck hs_check(const Graph& g, const VertexSet& h);

// All hereditary saturated subsets, sorted by size then lexicographically.
// Exhaustive over 2^h subsets; refuses graphs with more than max_vertices.
std::vector<VertexSet> hs_enumerate(const Graph& g, int max_vertices = 16);

// Quotient graph E/H: drops the vertices of H and every edge whose range
// lies in H. Requires H hereditary and saturated, and H != E0.
Graph quotient(const Graph& g, const VertexSet& h);

}  // namespace lpa
