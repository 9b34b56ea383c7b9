#include "closekit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace closekit {

namespace {

// Splits into lines, strips '#' comments and surrounding blanks, and keeps
// the original 1-based line number of every payload line.
std::vector<std::pair<int, std::string>> payload_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t last = line.find_last_not_of(" \t\r");
      out.emplace_back(line_no, std::string(line.substr(first, last - first + 1)));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

int parse_int(const std::string& field, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad " + std::string(what) + " '" + field + "' on line " +
                     std::to_string(line_no));
  }
  return value;
}

}  // namespace

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  if (u < 1) throw std::invalid_argument("vertex " + std::to_string(u) + " is not positive");
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.v > n_) {
      throw std::invalid_argument("vertex " + std::to_string(e.v) +
                                  " exceeds vertex count " + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (!has_edge(Edge(u, v))) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const {
  return static_cast<long>(edges_.size()) * 2 == static_cast<long>(n_) * (n_ - 1);
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph parse_graph(std::string_view text) {
  auto lines = payload_lines(text);
  if (lines.empty()) throw ParseError("missing header line");
  const auto& [header_no, header] = lines.front();
  auto fields = split_fields(header);
  if (fields.size() != 2 || fields[0] != "n") {
    throw ParseError("malformed header on line " + std::to_string(header_no) +
                     ", expected 'n <count>'");
  }
  int n = parse_int(fields[1], header_no, "vertex count");
  if (n < 0) throw ParseError("negative vertex count on line " + std::to_string(header_no));

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, line] = lines[i];
    auto parts = split_fields(line);
    if (parts.size() != 2) {
      throw ParseError("malformed edge on line " + std::to_string(line_no) +
                       ", expected 'u v'");
    }
    int u = parse_int(parts[0], line_no, "vertex");
    int v = parse_int(parts[1], line_no, "vertex");
    if (u == v) throw ParseError("self-loop on line " + std::to_string(line_no));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError("vertex out of range on line " + std::to_string(line_no));
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph mutate_copy(const Graph& g, std::optional<Edge> removed,
                  std::optional<Edge> added) {
  std::vector<Edge> edges = g.edges();
  if (removed) {
    if (!g.has_edge(*removed)) {
      throw std::invalid_argument("cannot delete missing link " + to_string(*removed));
    }
    edges.erase(std::find(edges.begin(), edges.end(), *removed));
  }
  if (added) {
    if (added->v > g.vertex_count()) {
      throw std::invalid_argument("added link " + to_string(*added) +
                                  " leaves the vertex range");
    }
    if (g.has_edge(*added) && !(removed && *removed == *added)) {
      throw std::invalid_argument("cannot add existing link " + to_string(*added));
    }
    edges.push_back(*added);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n + 1) {
    throw std::invalid_argument("permutation must list all vertices");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    if (perm[v] < 1 || perm[v] > n || seen[perm[v]]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[perm[v]] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n, std::move(edges));
}

DistanceMatrix::DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnreachable) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (int v = 1; v <= n; ++v) set(v, v, 0);
}

int DistanceMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("vertex out of range");
  return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void DistanceMatrix::set(int i, int j, int d) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("vertex out of range");
  cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = d;
  cells_[static_cast<std::size_t>(j - 1) * n_ + (i - 1)] = d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix dist(n);
  auto adj = g.adjacency();
  std::vector<int> level(n + 1);
  std::deque<int> queue;
  for (int s = 1; s <= n; ++s) {
    std::fill(level.begin(), level.end(), DistanceMatrix::kUnreachable);
    level[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (level[w] == DistanceMatrix::kUnreachable) {
          level[w] = level[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int t = s + 1; t <= n; ++t) {
      if (level[t] != DistanceMatrix::kUnreachable) dist.set(s, t, level[t]);
    }
  }
  return dist;
}

namespace {

const std::map<std::string, std::pair<Family, int>>& family_table() {
  // name -> (family, arity)
  static const std::map<std::string, std::pair<Family, int>> table = {
      {"path", {Family::path, 1}},         {"cycle", {Family::cycle, 1}},
      {"complete", {Family::complete, 1}}, {"cliques", {Family::cliques, 2}},
      {"lollipop", {Family::lollipop, 2}}, {"cycletails", {Family::cycletails, 3}},
  };
  return table;
}

std::string family_name(Family f) {
  for (const auto& [name, entry] : family_table()) {
    if (entry.first == f) return name;
  }
  return "?";
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec needs a ':', got '" + std::string(text) + "'");
  }
  std::string name(text.substr(0, colon));
  auto it = family_table().find(name);
  if (it == family_table().end()) {
    throw ParseError("unknown family '" + name + "'");
  }
  auto [family, arity] = it->second;

  std::vector<int> params;
  std::string rest(text.substr(colon + 1));
  std::istringstream in(rest);
  std::string field;
  while (std::getline(in, field, ',')) {
    params.push_back(parse_int(field, 1, "family parameter"));
  }
  if (static_cast<int>(params.size()) != arity) {
    throw ParseError("family '" + name + "' takes " + std::to_string(arity) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
  FamilySpec spec;
  spec.family = family;
  spec.a = params[0];
  if (arity > 1) spec.b = params[1];
  if (arity > 2) spec.c = params[2];
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  int arity = 1;
  for (const auto& [name, entry] : family_table()) {
    if (entry.first == spec.family) arity = entry.second;
  }
  std::string out = family_name(spec.family) + ":" + std::to_string(spec.a);
  if (arity > 1) out += "," + std::to_string(spec.b);
  if (arity > 2) out += "," + std::to_string(spec.c);
  return out;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return path_graph(spec.a);
    case Family::cycle: return cycle_graph(spec.a);
    case Family::complete: return complete_graph(spec.a);
    case Family::cliques: return linked_cliques_graph(spec.a, spec.b);
    case Family::lollipop: return lollipop_graph(spec.a, spec.b);
    case Family::cycletails: return cycle_tails_graph(spec.a, spec.b, spec.c);
  }
  throw std::invalid_argument("unknown family");
}

Graph path_graph(int n) {
  if (n < 1) throw std::domain_error("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::domain_error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::domain_error("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph linked_cliques_graph(int k, int m) {
  if (k < 2 || m < 2) throw std::domain_error("linked cliques need k,m >= 2");
  std::vector<Edge> edges;
  for (int u = 1; u <= k; ++u) {
    for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  }
  for (int u = k + 1; u <= k + m; ++u) {
    for (int v = u + 1; v <= k + m; ++v) edges.emplace_back(u, v);
  }
  edges.emplace_back(1, k + m);
  return Graph(k + m, std::move(edges));
}

Graph lollipop_graph(int n, int m) {
  if (n < 3 || m < 1) throw std::domain_error("lollipop needs n >= 3 and m >= 1");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  for (int v = n; v < n + m; ++v) edges.emplace_back(v, v + 1);
  return Graph(n + m, std::move(edges));
}

Graph cycle_tails_graph(int n, int p, int q) {
  if (n < 3 || p < 0 || q < 0) {
    throw std::domain_error("cycle with tails needs n >= 3 and p,q >= 0");
  }
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  int prev = 1;
  for (int v = n + 1; v <= n + p; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  prev = 2;
  for (int v = n + p + 1; v <= n + p + q; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  return Graph(n + p + q, std::move(edges));
}

Graph load_graph(const std::string& arg) {
  if (arg.find(':') != std::string::npos) {
    return generate(parse_family_spec(arg));
  }
  std::ifstream file(arg);
  if (!file) throw ParseError("cannot open graph file '" + arg + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace closekit
