#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace closekit {

// Malformed textual input. The message names the offending line.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unordered pair of distinct 1-based vertices. Stored normalized (u < v).
// Used both for existing links and for candidate links to add.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "(u,v)"

// Immutable simple undirected graph on vertices 1..n. Duplicate input edges
// collapse; self-loops and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted, unique
  bool has_edge(Edge e) const;
  std::vector<Edge> non_edges() const;  // sorted
  bool is_complete() const;
  // adjacency()[v] lists the neighbours of v; index 0 is unused.
  std::vector<std::vector<int>> adjacency() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Edge-list format: '#' starts a comment, first payload line is "n <count>",
// every following payload line is "u v" with 1-based endpoints.
Graph parse_graph(std::string_view text);

// Copy of g with `removed` deleted (must exist) and `added` inserted (must
// not exist). Either operation may be absent.
Graph mutate_copy(const Graph& g, std::optional<Edge> removed,
                  std::optional<Edge> added);

// Copy of g with vertex v renamed to perm[v]; perm[1..n] must be a
// permutation of 1..n (index 0 ignored).
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Pairwise shortest-path lengths; kUnreachable marks disconnected pairs.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n);

  int vertex_count() const { return n_; }
  int at(int i, int j) const;
  void set(int i, int j, int d);

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

enum class Family { path, cycle, complete, cliques, lollipop, cycletails };

// Parametric graph family, e.g. "cliques:3,3". Slots a,b,c hold the
// parameters in the order they appear; unused slots stay 0.
struct FamilySpec {
  Family family = Family::path;
  int a = 0;
  int b = 0;
  int c = 0;
};

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);      // n >= 1
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
// K_k on 1..k and K_m on k+1..k+m joined by the link {1, k+m}; k,m >= 2.
Graph linked_cliques_graph(int k, int m);
// K_n on 1..n with the path n+1..n+m attached at vertex n; n >= 3, m >= 1.
Graph lollipop_graph(int n, int m);
// Cycle 1..n with a p-vertex tail at vertex 1 and a q-vertex tail at
// vertex 2; n >= 3, p,q >= 0.
Graph cycle_tails_graph(int n, int p, int q);

// Accepts either a family spec ("cycle:6") or the path of an edge-list file.
Graph load_graph(const std::string& arg);

}  // namespace closekit
