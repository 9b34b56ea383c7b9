#pragma once

#include <optional>
#include <vector>

#include "closekit/graph.hpp"

namespace closekit {

// Closeness of the whole graph: sum of 2^(-d(i,j)) over ordered pairs of
// distinct vertices, unreachable pairs contributing 0.
double closeness(const Graph& g);
double closeness(const DistanceMatrix& d);

// Contribution of a single vertex: sum of 2^(-d(v,j)) over j != v.
double vertex_closeness(const Graph& g, int v);

// Extremal closeness value together with every link attaining it,
// in lexicographic order.
struct LinkOptimum {
  double value = 0.0;
  std::vector<Edge> links;
};

// Minimum closeness over single-link deletions; requires at least one link.
LinkOptimum residual_closeness(const Graph& g);

// Maximum closeness over single-link additions; requires a non-complete
// graph.
LinkOptimum additional_closeness(const Graph& g);

// Full per-graph summary. residual/additional (and the matching ratios nr,
// na) are absent when undefined: no links to delete, no links to add.
struct MetricReport {
  double closeness = 0.0;
  std::optional<LinkOptimum> residual;
  std::optional<LinkOptimum> additional;
  std::optional<double> nr;  // residual / closeness
  std::optional<double> na;  // additional / closeness
};

MetricReport metric_report(const Graph& g);

}  // namespace closekit
